"""Circle geometry, the simplex predicate, the Euler-characteristic DP,
coverage, the homology oracle, and the point-file format."""
import math
from fractions import Fraction

import numpy as np
import pytest

from cechcircle import (
    DomainError,
    PointConfig,
    PointFileError,
    SimplicialComplex,
    SizeError,
    betti_gf2,
    build_complex,
    covers_circle,
    euler_char_exact,
    expected_euler_char,
    is_simplex,
    load_point_file,
    sample_uniform,
    uniform_config,
)
from cechcircle.montecarlo import estimate_chi, trial_rng

from conftest import random_config


# ---------------------------------------------------------------------------
# PointConfig and sampling
# ---------------------------------------------------------------------------

def test_config_sorted_deduplicated():
    config = PointConfig.from_points([0.5, 0.1, 0.5, 0.9])
    assert config.positions == (0.1, 0.5, 0.9)
    assert config.n == 3
    with pytest.raises(DomainError):
        PointConfig.from_points([0.2, 1.0])
    with pytest.raises(DomainError):
        PointConfig.from_points([])


def test_gaps_sum_to_one():
    rng = np.random.default_rng(0)
    for _ in range(100):
        config = random_config(rng, int(rng.integers(1, 30)))
        assert abs(math.fsum(config.gaps()) - 1) < 1e-12


def test_uniform_config():
    assert uniform_config(4).positions == (0, Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))
    assert uniform_config(1).positions == (0,)
    assert set(uniform_config(5).gaps()) == {Fraction(1, 5)}
    with pytest.raises(DomainError):
        uniform_config(0)


def test_sample_uniform_basics():
    config = sample_uniform(1, np.random.default_rng(3))
    assert config.n == 1 and config.gaps() == (1,)
    a = sample_uniform(3, np.random.default_rng(42))
    b = sample_uniform(3, np.random.default_rng(42))
    assert a == b
    with pytest.raises(DomainError):
        sample_uniform(0, np.random.default_rng(1))


def test_sample_uniform_mean():
    config = sample_uniform(10**4, np.random.default_rng(5))
    mean = math.fsum(config.positions) / config.n
    assert 0.49 <= mean <= 0.51


# ---------------------------------------------------------------------------
# Simplex predicate and coverage
# ---------------------------------------------------------------------------

def test_is_simplex_examples():
    config = PointConfig.from_points([0, 0.4, 0.8])
    assert not is_simplex(config, [0, 1, 2], 0.225)  # max gap 0.4 < 0.55
    pair = PointConfig.from_points([0, 0.5])
    assert is_simplex(pair, [0, 1], 0.25)  # antipodal arcs of radius 1/4 touch
    assert is_simplex(pair, [0], 0.01)
    with pytest.raises(DomainError):
        is_simplex(pair, [], 0.2)


def test_is_simplex_monotone():
    rng = np.random.default_rng(21)
    cases = 0
    while cases < 10**5:
        n = int(rng.integers(2, 11))
        config = random_config(rng, n)
        for _ in range(10):
            size = int(rng.integers(1, config.n + 1))
            subset = list(rng.choice(config.n, size=size, replace=False))
            t1, t2 = sorted(rng.uniform(0.01, 0.49, size=2))
            if is_simplex(config, subset, t1):
                # monotone in t
                assert is_simplex(config, subset, t2)
                # antitone under enlargement: every sub-subset is a simplex
                keep = int(rng.integers(1, size + 1))
                assert is_simplex(config, subset[:keep], t1)
            cases += 1


def test_covers_circle_examples():
    assert covers_circle(uniform_config(4), 0.125)  # gaps 0.25 = 2 * 0.125
    assert not covers_circle(PointConfig.from_points([0, 0.5]), 0.2)
    with pytest.raises(DomainError):
        covers_circle(uniform_config(4), 0)


def test_coverage_duality():
    # covers_circle(config, 1/2 - t) is false iff the full vertex set is a
    # simplex at radius t (ties are measure-zero for random configs)
    rng = np.random.default_rng(22)
    for _ in range(10**5):
        n = int(rng.integers(1, 11))
        config = random_config(rng, n)
        t = float(rng.uniform(0.05, 0.45))
        covered = covers_circle(config, 0.5 - t)
        simplex = is_simplex(config, range(config.n), t)
        assert covered == (not simplex)


# ---------------------------------------------------------------------------
# Oracle complex and homology
# ---------------------------------------------------------------------------

def test_build_complex_cycle():
    cx = build_complex(uniform_config(4), 0.13)  # N(4, 1) = C_4
    layers = cx.by_dimension()
    assert [len(layer) for layer in layers] == [4, 4]
    assert cx.check_face_closure()
    assert betti_gf2(cx) == (1, 1)


def test_build_complex_two_sphere():
    cx = build_complex(uniform_config(4), 0.26)  # N(4, 2) = S^2
    layers = cx.by_dimension()
    assert [len(layer) for layer in layers] == [4, 6, 4]  # no 3-simplex
    assert cx.euler_characteristic() == 2
    assert betti_gf2(cx) == (1, 0, 1)


def test_build_complex_isolated_vertices():
    cx = build_complex(PointConfig.from_points([0, 0.5]), 0.2)
    assert [len(layer) for layer in cx.by_dimension()] == [2]
    assert betti_gf2(cx) == (2,)


def test_build_complex_guard():
    with pytest.raises(SizeError):
        build_complex(uniform_config(21), 0.1)


def test_betti_single_vertex():
    assert betti_gf2(SimplicialComplex(1, [1])) == (1,)


def test_complex_rejects_empty_simplex():
    with pytest.raises(DomainError):
        SimplicialComplex(2, [0, 1])


# ---------------------------------------------------------------------------
# Exact Euler characteristic
# ---------------------------------------------------------------------------

def test_euler_examples():
    assert euler_char_exact(PointConfig.from_points([0, 0.5]), 0.2) == 2
    assert euler_char_exact(uniform_config(4), 0.26) == 2  # chi(S^2)
    rng = np.random.default_rng(8)
    assert euler_char_exact(random_config(rng, 17), 0.5) == 1
    assert euler_char_exact(random_config(rng, 17), 0.7) == 1


def test_euler_matches_oracle():
    rng = np.random.default_rng(23)
    for _ in range(500):
        n = int(rng.integers(1, 16))
        config = random_config(rng, n)
        t = float(rng.uniform(0.01, 0.49))
        cx = build_complex(config, t)
        chi = euler_char_exact(config, t)
        assert chi == cx.euler_characteristic()
        betti = betti_gf2(cx)
        assert chi == sum((-1) ** d * b for d, b in enumerate(betti))


@pytest.mark.parametrize("n,t", [(10, 0.1), (50, 0.2525), (100, 0.33)])
def test_euler_mean_matches_closed_form(n, t):
    est = estimate_chi(n, t, 10**4, master_seed=1234)
    exact = expected_euler_char(n, t)
    # the floor covers the degenerate zero-variance case at (100, 0.33),
    # where chi-bar ~ 6e-14 and every sampled chi is exactly 0
    assert abs(est.mean - exact) <= 3 * est.std_error + 1e-12


# ---------------------------------------------------------------------------
# Point files
# ---------------------------------------------------------------------------

def test_load_point_file(tmp_path):
    path = tmp_path / "points.txt"
    path.write_text("# a comment\n0.5\n0.25  # trailing comment\n\n0.75\n0.0\n")
    config = load_point_file(path)
    assert config.positions == (0.0, 0.25, 0.5, 0.75)


def test_load_point_file_rejects_out_of_range(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("0.5\n1.25\n")
    with pytest.raises(PointFileError) as err:
        load_point_file(path)
    assert err.value.line_no == 2


def test_load_point_file_rejects_garbage(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("0.5\nhello\n")
    with pytest.raises(PointFileError) as err:
        load_point_file(path)
    assert err.value.line_no == 2


def test_load_point_file_rejects_empty(tmp_path):
    path = tmp_path / "empty.txt"
    path.write_text("# nothing here\n")
    with pytest.raises(PointFileError):
        load_point_file(path)


# ---------------------------------------------------------------------------
# Per-trial streams
# ---------------------------------------------------------------------------

def test_trial_rng_streams():
    a = trial_rng(7, 0).random(4)
    b = trial_rng(7, 0).random(4)
    c = trial_rng(7, 1).random(4)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)
