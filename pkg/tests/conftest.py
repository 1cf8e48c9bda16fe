"""Shared helpers for the test suite."""
import numpy as np

from cechcircle import PointConfig


def random_config(rng: np.random.Generator, n: int) -> PointConfig:
    """Random n-point configuration from a seeded generator."""
    return PointConfig.from_points(float(x) for x in rng.random(n))
