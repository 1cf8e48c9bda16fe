"""Seeded, reproducible sampling experiments and the statistical
verification harness.

Every trial draws from an independent Philox stream keyed by
(master_seed, trial index), so results are bit-identical regardless of
execution order or worker count.  Proportions get Wilson intervals, means
get normal intervals; 99% confidence by default.
"""
from __future__ import annotations

import json
import math
import time
from collections import Counter
from dataclasses import dataclass, field
from statistics import NormalDist

import numpy as np

from .circle import PointConfig, covers_circle, _euler_from_sorted
from .classify import classify
from .errors import DomainError, InternalInconsistencyError, UnclassifiedError
from .exact import (
    allowed_types,
    coverage_probability,
    elder_c_bounds,
    expected_euler_char,
    theorem_b_params,
)
from .homotopy import HomotopyType

GENERATOR_ID = "numpy-philox4x64"
DEFAULT_CONFIDENCE = 0.99


def trial_rng(master_seed: int, trial: int) -> np.random.Generator:
    """Independent stream for one trial; counter-based, order-free."""
    key = np.array([master_seed & (2**64 - 1), trial], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def _sorted_sample(n: int, rng) -> list[float]:
    xs = np.sort(rng.random(n))
    return [float(x) for x in xs]


def _z(confidence: float) -> float:
    return NormalDist().inv_cdf(0.5 + confidence / 2)


@dataclass(frozen=True)
class EstimateWithCI:
    mean: float
    std_error: float
    ci_low: float
    ci_high: float
    method: str  # "normal" for means, "wilson" for proportions
    trials: int
    confidence: float = DEFAULT_CONFIDENCE


def _normal_estimate(values, confidence=DEFAULT_CONFIDENCE) -> EstimateWithCI:
    n = len(values)
    if n < 2:
        raise DomainError("need at least 2 trials")
    mean = math.fsum(values) / n
    var = math.fsum((v - mean) ** 2 for v in values) / (n - 1)
    se = math.sqrt(var / n)
    z = _z(confidence)
    return EstimateWithCI(mean, se, mean - z * se, mean + z * se, "normal", n, confidence)


def wilson_estimate(successes: int, trials: int, confidence=DEFAULT_CONFIDENCE) -> EstimateWithCI:
    if trials < 1:
        raise DomainError("need at least 1 trial")
    p = successes / trials
    se = math.sqrt(p * (1 - p) / trials)
    z = _z(confidence)
    denom = 1 + z * z / trials
    center = (p + z * z / (2 * trials)) / denom
    half = z * math.sqrt(p * (1 - p) / trials + z * z / (4 * trials * trials)) / denom
    lo = min(p, max(0.0, center - half))
    hi = max(p, min(1.0, center + half))
    return EstimateWithCI(p, se, lo, hi, "wilson", trials, confidence)


# ---------------------------------------------------------------------------
# Census
# ---------------------------------------------------------------------------

@dataclass
class Census:
    """Homotopy-type frequency table with full replay metadata."""

    n: int
    t: float
    trials: int
    master_seed: int
    generator_id: str
    counts: dict[HomotopyType, int]
    unclassified: int
    chi_checked: int    # trials cross-checked against the exact Euler DP
    chi_agreed: int     # of those, how many agreed (must equal chi_checked)
    elapsed: float

    def frequency(self, ht: HomotopyType) -> float:
        return self.counts.get(ht.canonical(), 0) / self.trials

    def to_json_dict(self) -> dict:
        counts = [
            {"type": ht.to_json(), "count": c}
            for ht, c in sorted(self.counts.items(), key=lambda kv: kv[0].sort_key())
        ]
        return {
            "n": self.n,
            "t": self.t,
            "trials": self.trials,
            "master_seed": self.master_seed,
            "generator_id": self.generator_id,
            "counts": counts,
            "unclassified": self.unclassified,
            "chi_checked": self.chi_checked,
            "chi_agreed": self.chi_agreed,
            "metadata": {"elapsed": self.elapsed},
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_json_dict(), indent=indent, sort_keys=True)


def _census_chunk(args):
    n, t, master_seed, start, stop, cross_check = args
    counts: Counter = Counter()
    unclassified = 0
    checked = agreed = 0
    rho = 1 - 2 * t
    for trial in range(start, stop):
        xs = _sorted_sample(n, trial_rng(master_seed, trial))
        config = PointConfig.from_points(xs)
        try:
            ht = classify(config, t)
        except UnclassifiedError:
            unclassified += 1
            continue
        counts[ht] += 1
        if cross_check:
            checked += 1
            if ht.euler_characteristic() == _euler_from_sorted(config.positions, rho):
                agreed += 1
    return counts, unclassified, checked, agreed


def run_census(
    n: int,
    t: float,
    trials: int,
    master_seed: int,
    *,
    workers: int = 1,
    cross_check: bool = True,
) -> Census:
    """Classify `trials` independent samples and tally homotopy types.

    Unclassified samples land in their own bucket; the run never aborts.
    The result is independent of `workers` and of scheduling.
    """
    if trials < 1:
        raise DomainError("trials must be >= 1")
    started = time.perf_counter()
    chunks = []
    if workers <= 1:
        chunks.append(_census_chunk((n, t, master_seed, 0, trials, cross_check)))
    else:
        from concurrent.futures import ProcessPoolExecutor

        step = -(-trials // workers)
        jobs = [
            (n, t, master_seed, lo, min(lo + step, trials), cross_check)
            for lo in range(0, trials, step)
        ]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_census_chunk, jobs))
    counts: Counter = Counter()
    unclassified = checked = agreed = 0
    for c, u, ck, ag in chunks:
        counts.update(c)
        unclassified += u
        checked += ck
        agreed += ag
    allowed = allowed_types(n, t)
    for ht in counts:
        if not allowed.allows(ht):
            raise InternalInconsistencyError(
                f"census key {ht.display()} outside the constraint set"
            )
    if agreed != checked:
        raise InternalInconsistencyError(
            f"Euler cross-check failed on {checked - agreed} of {checked} trials"
        )
    return Census(
        n=n,
        t=float(t),
        trials=trials,
        master_seed=master_seed,
        generator_id=GENERATOR_ID,
        counts=dict(counts),
        unclassified=unclassified,
        chi_checked=checked,
        chi_agreed=agreed,
        elapsed=time.perf_counter() - started,
    )


# ---------------------------------------------------------------------------
# Estimators
# ---------------------------------------------------------------------------

def estimate_chi(n: int, t: float, trials: int, master_seed: int) -> EstimateWithCI:
    """Monte Carlo mean of the per-sample exact Euler characteristic.

    Deliberately uses the gap DP rather than the classifier, so the two
    sampling pipelines stay independent of each other.
    """
    if trials < 2:
        raise DomainError("trials must be >= 2")
    rho = 1 - 2 * t
    values = []
    for trial in range(trials):
        xs = _sorted_sample(n, trial_rng(master_seed, trial))
        values.append(_euler_from_sorted(xs, rho))
    return _normal_estimate(values)


def estimate_betti(n: int, t: float, dim: int, trials: int, master_seed: int) -> EstimateWithCI:
    """Monte Carlo mean of the classifier-derived Betti number in one degree.

    Unclassified samples are excluded from the mean (and would surface in a
    census run at the same parameters).
    """
    if trials < 2:
        raise DomainError("trials must be >= 2")
    values = []
    for trial in range(trials):
        xs = _sorted_sample(n, trial_rng(master_seed, trial))
        try:
            ht = classify(PointConfig.from_points(xs), t)
        except UnclassifiedError:
            continue
        betti = ht.betti()
        values.append(betti[dim] if dim < len(betti) else 0)
    return _normal_estimate(values)


def estimate_coverage(n: int, radius: float, trials: int, master_seed: int) -> EstimateWithCI:
    if trials < 2:
        raise DomainError("trials must be >= 2")
    hits = 0
    for trial in range(trials):
        xs = _sorted_sample(n, trial_rng(master_seed, trial))
        if covers_circle(PointConfig.from_points(xs), radius):
            hits += 1
    return wilson_estimate(hits, trials)


def estimate_B(census: Census, k: int, delta: float) -> EstimateWithCI:
    """Proportion of census trials landing in the aggregated even-wedge event:
    type wedge^a(S^(2k-2)) with delta*n/k <= a+1 <= n/k."""
    if census.trials < 1:
        raise DomainError("census is empty")
    expected_k = allowed_types(census.n, census.t).k
    if k != expected_k:
        raise DomainError(f"k={k} does not match census t (k should be {expected_k})")
    lo = delta * census.n / k
    hi = census.n / k
    hits = 0
    for ht, count in census.counts.items():
        if ht.kind != "even":
            continue
        if ht.l != k - 1 and ht.a != 0:  # a point counts as the a=0 wedge
            continue
        if lo <= ht.a + 1 <= hi:
            hits += count
    return wilson_estimate(hits, census.trials)


# ---------------------------------------------------------------------------
# Verification harness
# ---------------------------------------------------------------------------

@dataclass
class VerifyReport:
    theorem: str
    passed: bool
    details: dict = field(default_factory=dict)

    def to_json(self, indent: int | None = 2) -> str:
        payload = {"theorem": self.theorem, "passed": self.passed, **self.details}
        return json.dumps(payload, indent=indent, sort_keys=True)


def verify_theorem_a1(n: int, t: float, trials: int, master_seed: int) -> VerifyReport:
    """Empirical chi-bar against the closed form, at 3 standard errors."""
    est = estimate_chi(n, t, trials, master_seed)
    exact = expected_euler_char(n, t)
    delta = abs(est.mean - exact)
    passed = delta <= 3 * est.std_error or delta == 0
    return VerifyReport("a1", passed, {
        "n": n, "t": t, "trials": trials, "master_seed": master_seed,
        "empirical_mean": est.mean, "std_error": est.std_error,
        "exact": exact, "abs_delta": delta, "tolerance": 3 * est.std_error,
    })


def verify_theorem_a2(
    k: int, n: int, trials: int, master_seed: int,
    t: float | None = None, margin: float = 0.05,
) -> VerifyReport:
    """Sandwich: chi/n - margin <= b_(2k-2)/n <= chi/n with exact chi."""
    if k < 2:
        raise DomainError("k must be >= 2")
    if t is None:
        t = (k - 1) * n / (2 * (n - 1) * k)  # spike center
    chi_norm = expected_euler_char(n, t) / n
    est = estimate_betti(n, t, 2 * k - 2, trials, master_seed)
    b_norm = est.mean / n
    passed = chi_norm - margin <= b_norm <= chi_norm
    return VerifyReport("a2", passed, {
        "k": k, "n": n, "t": t, "trials": trials, "master_seed": master_seed,
        "chi_normalized": chi_norm, "betti_normalized": b_norm,
        "margin": margin, "std_error": est.std_error / n,
    })


def verify_theorem_b(k: int, n: int, t: float, trials: int, master_seed: int) -> VerifyReport:
    """Frequency of S^(2k+1) against the coverage bound Q_n(r'/2)."""
    params = theorem_b_params(k)
    if not abs(t - params.nu_k) < params.tau_k:
        raise DomainError(
            f"t={t} outside the open interval around nu_{k}={params.nu_k}"
        )
    r_prime = params.r_prime(t)
    bound = coverage_probability(n, r_prime)  # Q_n(r'/2) has arc length r'
    target = HomotopyType.odd_sphere(k)
    hits = 0
    unclassified = 0
    for trial in range(trials):
        xs = _sorted_sample(n, trial_rng(master_seed, trial))
        try:
            if classify(PointConfig.from_points(xs), t) == target:
                hits += 1
        except UnclassifiedError:
            unclassified += 1
    est = wilson_estimate(hits, trials)
    passed = est.mean >= bound - 3 * est.std_error
    return VerifyReport("b", passed, {
        "k": k, "n": n, "t": t, "trials": trials, "master_seed": master_seed,
        "frequency": est.mean, "std_error": est.std_error,
        "bound": bound, "r_prime": r_prime, "unclassified": unclassified,
    })


def verify_theorem_elder_c(
    k: int, n: int, trials: int, master_seed: int,
    delta: float | None = None, epsilon: float = 0.1, slack: float = 0.1,
    workers: int = 1,
) -> VerifyReport:
    """Empirical B_{k,delta} inside the analytic window, with statistical slack.

    Runs at the window center t = (1 - (n-k)/((n-1)k))/2.  Also reports the
    even-wedge event frequency in the stronger range stated for the spike
    probability bound, without asserting that asymptotic constant.
    """
    from .exact import omega

    if delta is None:
        delta = k * omega(k) / 2
    bounds = elder_c_bounds(k, n, delta, epsilon)
    rho_center = (n - k) / ((n - 1) * k)
    t = (1 - rho_center) / 2
    census = run_census(n, t, trials, master_seed, workers=workers, cross_check=False)
    est = estimate_B(census, k, delta)
    lo = bounds.beta[0] - slack
    hi = min(1.0, bounds.beta[1] + slack)
    passed = lo <= est.mean <= hi and census.unclassified == 0
    return VerifyReport("c", passed, {
        "k": k, "n": n, "t": t, "trials": trials, "master_seed": master_seed,
        "delta": delta, "epsilon": epsilon, "slack": slack,
        "B_empirical": est.mean, "std_error": est.std_error,
        "beta_lower": bounds.beta[0], "beta_upper": bounds.beta[1],
        "window": [lo, hi], "unclassified": census.unclassified,
    })
