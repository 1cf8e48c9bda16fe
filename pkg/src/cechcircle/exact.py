"""Closed-form quantities for random Cech complexes of circular arcs.

Conventions used throughout:

* The circle has unit circumference.
* The public coordinate is always the filtration radius ``t``; the dual gap
  parameter ``rho = 1 - 2t`` appears only internally and in window outputs
  explicitly labelled as rho-coordinates.
* ``0**0 == 1`` everywhere.
* Expected Euler characteristics are evaluated through the all-nonnegative
  sum (log-gamma term computation); the alternating coverage sum uses
  compensated summation, with an exact rational mode as ground truth.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .homotopy import HomotopyType


def _log_comb(n: int, k: int) -> float:
    return math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)


def clamp01(x: float) -> float:
    return 0.0 if x < 0.0 else (1.0 if x > 1.0 else x)


# ---------------------------------------------------------------------------
# Coverage probability (Stevens)
# ---------------------------------------------------------------------------

def coverage_probability(k: int, arc_length, *, exact: bool = False):
    """Probability that k i.i.d. uniform arcs of the given length cover the circle.

    Returns the raw analytic value of the alternating sum
    sum_l (-1)^l C(k,l) (1 - l*a)^(k-1); callers clamp to [0,1] themselves.
    With ``exact=True`` the arc length is taken as an exact rational and a
    Fraction is returned.
    """
    if k < 1:
        raise DomainError("k must be >= 1")
    if arc_length <= 0:
        raise DomainError("arc_length must be > 0")
    if exact:
        a = Fraction(arc_length)
        if a >= 1:
            return Fraction(1)
        total = Fraction(0)
        sign = 1
        l = 0
        while l <= k and l * a <= 1:
            total += sign * math.comb(k, l) * (1 - l * a) ** (k - 1)
            sign = -sign
            l += 1
        return total
    a = float(arc_length)
    if a >= 1.0:
        return 1.0
    terms = []
    l = 0
    while l <= k and l * a <= 1.0:
        base = 1.0 - l * a
        if base < 0.0:
            base = 0.0
        term = math.comb(k, l) * base ** (k - 1)
        terms.append(term if l % 2 == 0 else -term)
        l += 1
    return math.fsum(terms)


# ---------------------------------------------------------------------------
# Expected Euler characteristic (piecewise polynomial in the gap parameter)
# ---------------------------------------------------------------------------

def expected_euler_char(n: int, t, *, exact: bool = False):
    """Expected Euler characteristic of the Cech complex of n uniform points.

    With r = 1 - 2t this is sum_{k=1}^{floor(1/r)} C(n,k)(1-kr)^(k-1)(kr)^(n-k);
    all summands are nonnegative.  Returns 1 for t >= 1/2 (full simplex).
    ``exact=True`` evaluates in exact rational arithmetic (t is converted to
    a Fraction, which is lossless for binary floats).
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    if t <= 0:
        raise DomainError("t must be > 0")
    if exact:
        tq = Fraction(t)
        if tq >= Fraction(1, 2):
            return Fraction(1)
        r = 1 - 2 * tq
        total = Fraction(0)
        for k in range(1, n + 1):
            kr = k * r
            if kr > 1:
                break
            total += math.comb(n, k) * (1 - kr) ** (k - 1) * kr ** (n - k)
        return total
    t = float(t)
    if t >= 0.5:
        return 1.0
    r = 1.0 - 2.0 * t
    terms = []
    for k in range(1, n + 1):
        kr = k * r
        if kr > 1.0:
            break
        lg = _log_comb(n, k)
        if k > 1:
            base = 1.0 - kr
            if base <= 0.0:
                continue  # zero term; k=1 is the only 0**0 case and kr<=1<... here base>0 for k=1
            lg += (k - 1) * math.log(base)
        if k < n:
            lg += (n - k) * math.log(kr)
        terms.append(math.exp(lg))
    return math.fsum(terms)


def expected_euler_curve(n: int, t_grid):
    """Pointwise expected Euler characteristic: list of (t, chi, chi/n)."""
    grid = list(t_grid)
    if not grid:
        raise DomainError("empty t grid")
    for lo, hi in zip(grid, grid[1:]):
        if not lo < hi:
            raise DomainError("t grid must be strictly increasing")
    if grid[0] <= 0 or grid[-1] >= 0.5:
        raise DomainError("grid values must lie in (0, 1/2)")
    out = []
    for t in grid:
        chi = expected_euler_char(n, t)
        out.append((t, chi, chi / n))
    return out


# ---------------------------------------------------------------------------
# Spike analytics
# ---------------------------------------------------------------------------

def omega(m: int) -> float:
    """Normalized limiting spike height (m-1)^(m-1) / (m! e^(m-1))."""
    if m < 1:
        raise DomainError("m must be >= 1")
    lg = -math.lgamma(m + 1) - (m - 1)
    if m > 1:
        lg += (m - 1) * math.log(m - 1)
    return math.exp(lg)


@dataclass(frozen=True)
class SpikeAnalysis:
    """Per-spike record; window is in rho-coordinates (rho = 1 - 2t)."""

    m: int
    n: int
    center_t: float
    a_mn: float
    b_mn: float
    omega_m: float
    window_rho: tuple[float, float] | None


def spike_analysis(m: int, n: int, epsilon: float = 0.1, *, window: bool = True) -> SpikeAnalysis:
    """Height bounds and localization window of the m-th Euler spike.

    The exact height bounds a_mn, b_mn require 2 <= m and m < sqrt(n); the
    localization window additionally requires n > 2m^2 and epsilon in (0,1).
    Pass ``window=False`` to compute the bounds alone under the weaker
    precondition 2 <= m < n.
    """
    if m < 2:
        raise DomainError(f"need m >= 2, got m={m}")
    if window:
        if not m * m < n:
            raise DomainError(f"need m < sqrt(n): m^2={m * m} >= n={n}")
        if not n > 2 * m * m:
            raise DomainError(f"need n > 2m^2: n={n} <= {2 * m * m}")
        if not 0 < epsilon < 1:
            raise DomainError(f"need epsilon in (0,1), got {epsilon}")
    elif not m < n:
        raise DomainError(f"need m < n, got m={m}, n={n}")

    center_t = (m - 1) * n / (2 * (n - 1) * m)
    lg_a = (
        _log_comb(n, m)
        + (m - 1) * math.log(m - 1)
        + (n - m) * math.log(n - m)
        - math.log(n)
        - (n - 1) * math.log(n - 1)
    )
    a_mn = math.exp(lg_a)
    b_mn = math.exp(1.0 + (m - 1) * math.log(n) + (n - 1) * math.log(m / (m + 1)))
    win = None
    if window:
        center_rho = (n - m) / ((n - 1) * m)
        half = epsilon * math.sqrt(m - 1) / n
        win = (center_rho * (1 - half), center_rho * (1 + half))
    return SpikeAnalysis(m, n, center_t, a_mn, b_mn, omega(m), win)


def spike_center_exact(m: int, n: int) -> Fraction:
    """Exact spike center (m-1)n / (2(n-1)m) in t-coordinates."""
    if m < 2 or n <= m:
        raise DomainError("need 2 <= m < n")
    return Fraction((m - 1) * n, 2 * (n - 1) * m)


def spike_a_exact(m: int, n: int) -> Fraction:
    """Exact spike lower height a_mn = C(n,m)(m-1)^(m-1)(n-m)^(n-m) / (n(n-1)^(n-1)).

    The float field of SpikeAnalysis carries ~1e-13 relative error, which
    matters because the sandwich width b_mn can be smaller than that; the
    sandwich tests compare against this exact value instead.
    """
    if m < 2 or n <= m:
        raise DomainError("need 2 <= m < n")
    num = math.comb(n, m) * (m - 1) ** (m - 1) * (n - m) ** (n - m)
    return Fraction(num, n * (n - 1) ** (n - 1))


@dataclass(frozen=True)
class PowerProductPeak:
    """Extremum data of t^a (1-t)^b on [0, 1]."""

    a: float
    b: float
    t0: float
    max_value: float
    u: float  # equals max_value; slope constant of the linear lower bounds
    v: float  # sqrt((a+b)/(ab)); slope constant of the linear lower bounds

    def lambda_window_radius(self, lam: float) -> float:
        """Radius around t0 within which the value exceeds lam * max_value."""
        if not 0 <= lam <= 1:
            raise DomainError("lambda must be in [0,1]")
        return (1 - lam) * math.sqrt(self.a * self.b) / (self.a + self.b) ** 1.5

    def linear_lower_bound(self, t: float) -> float:
        """The linear minorant of t^a (1-t)^b valid on the side of t0 containing t."""
        s = 1.0 if t < self.t0 else -1.0
        return self.u * (s * (self.a + self.b) * self.v * t - s * self.a * self.v + 1.0)


def peak_of_power_product(a: float, b: float) -> PowerProductPeak:
    """Unique maximum of t^a (1-t)^b over [0,1], for a, b >= 1."""
    if a < 1 or b < 1:
        raise DomainError("need a, b >= 1")
    t0 = a / (a + b)
    mx = math.exp(a * math.log(a) + b * math.log(b) - (a + b) * math.log(a + b))
    v = math.sqrt((a + b) / (a * b))
    return PowerProductPeak(a, b, t0, mx, mx, v)


def f_mn(m: int, n: int, t: float) -> float:
    """The dominant spike summand C(n,m) (mt)^(m-1) (1-mt)^(n-m)."""
    if m < 1 or n < 1:
        raise DomainError("need m, n >= 1")
    mt = m * t
    if not 0 <= mt <= 1:
        raise DomainError(f"need 0 <= m*t <= 1, got {mt}")
    lg = _log_comb(n, m)
    if m > 1:
        if mt == 0:
            return 0.0
        lg += (m - 1) * math.log(mt)
    if n > m:
        if mt == 1:
            return 0.0
        lg += (n - m) * math.log(1 - mt)
    return math.exp(lg)


def f_mn_peak(m: int, n: int) -> tuple[float, float]:
    """Maximizer t0 = (1 - 1/m)/(n-1) of f_mn and the value there."""
    if m < 1 or n < 2:
        raise DomainError("need m >= 1 and n >= 2")
    t0 = (1 - 1 / m) / (n - 1)
    return t0, f_mn(m, n, t0)


# ---------------------------------------------------------------------------
# Theorem parameter packs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TheoremBParams:
    """Odd-sphere plateau: S^(2k+1) dominates for |t - nu_k| < tau_k."""

    k: int
    nu_k: float
    tau_k: float

    def r_prime(self, t: float) -> float:
        """Coverage slack at radius t; the success bound is Q_n(r'/2)."""
        return self.tau_k - abs(t - self.nu_k)


def theorem_b_params(k: int) -> TheoremBParams:
    if k < 0:
        raise DomainError("k must be >= 0")
    denom = 4 * (k + 1) * (k + 2)
    return TheoremBParams(k, (2 * k * k + 4 * k + 1) / denom, 1 / denom)


@dataclass(frozen=True)
class TheoremCParams:
    """Even-wedge spike: parameters of the probability lower bound."""

    k: int
    eta: float
    n: int
    rho_kn: float           # corrected window center, in t-coordinates
    rho_kn_printed: float   # the published value, recorded for reference only
    sigma_k_eta: float
    omega_k: float
    prob_lower: float
    wedge_range: tuple[int, int]  # inclusive bounds on a+1


def theorem_c_params(k: int, eta: float, n: int) -> TheoremCParams:
    if k < 2:
        raise DomainError("k must be >= 2")
    if not 0 < eta < 1:
        raise DomainError("eta must be in (0,1)")
    if n < 2:
        raise DomainError("n must be >= 2")
    w = omega(k)
    # The published center n(k+1)/(2k(n-1)) exceeds 1/2; the value consistent
    # with the B_{k,delta} window center (n-k)/((n-1)k) in rho-coordinates is
    # n(k-1)/(2k(n-1)), which is what all computations use.
    rho = n * (k - 1) / (2 * k * (n - 1))
    rho_printed = n * (k + 1) / (2 * k * (n - 1))
    sigma = (1 - eta) ** 3 * (k * w) ** 3 / (320 * math.sqrt(k + 2))
    lo = math.ceil((1 - eta) * w * n / 2)
    hi = math.floor(n / k)
    return TheoremCParams(k, eta, n, rho, rho_printed, sigma, w, eta * k * w, (lo, hi))


@dataclass(frozen=True)
class ElderCBounds:
    """Window for the aggregated even-wedge probability B_{k,delta}."""

    k: int
    n: int
    delta: float
    epsilon: float
    alpha: tuple[float, float]        # rho-coordinates
    beta: tuple[float, float]         # raw analytic bounds; may leave [0,1]
    b_window: tuple[float, float]     # [beta- - eps, beta+ + eps] cut to [0,1]


def elder_c_bounds(k: int, n: int, delta: float, epsilon: float) -> ElderCBounds:
    if k < 2:
        raise DomainError("k must be >= 2")
    if n < 2:
        raise DomainError("n must be >= 2")
    if not 0 < delta < 1:
        raise DomainError("delta must be in (0,1)")
    if not 0 < epsilon < 1:
        raise DomainError("epsilon must be in (0,1)")
    w = omega(k)
    kw = k * w
    center = (n - k) / ((n - 1) * k)
    half = (math.sqrt(k - 1) / n) * (delta * (1 - delta) / 5) * epsilon
    alpha = (center * (1 - half), center * (1 + half))
    beta_lo = (kw - delta) / (1 - delta)
    beta_hi = kw / delta
    b_window = (max(0.0, beta_lo - epsilon), min(1.0, beta_hi + epsilon))
    return ElderCBounds(k, n, delta, epsilon, alpha, (beta_lo, beta_hi), b_window)


@dataclass(frozen=True)
class Prop3Bounds:
    lower_raw: float
    upper_raw: float
    lower: float
    upper: float


def main_prop3_bounds(A_k: float, n: int, k: int, delta: float) -> Prop3Bounds:
    """Bounds (kA_k - delta n)/((1-delta)n + k) <= B_{k,delta} <= kA_k/(delta n)."""
    if A_k < 0:
        raise DomainError("A_k must be >= 0")
    if not 0 < delta < 1:
        raise DomainError("delta must be in (0,1)")
    if k < 2:
        raise DomainError("k must be >= 2")
    if n < 1:
        raise DomainError("n must be >= 1")
    lower = (k * A_k - delta * n) / ((1 - delta) * n + k)
    upper = k * A_k / (delta * n)
    return Prop3Bounds(lower, upper, clamp01(lower), clamp01(upper))


# ---------------------------------------------------------------------------
# Homotopy type of the canonical complexes N(n, k) and the constraint set
# ---------------------------------------------------------------------------

def n_k_homotopy(n: int, k: int) -> HomotopyType:
    """Homotopy type of N(n, k): the nerve on n equally spaced points whose
    maximal faces are k+1 consecutive points.  Exact rational comparison."""
    if not 0 <= k <= n - 1:
        raise DomainError(f"need 0 <= k <= n-1, got k={k}, n={n}")
    q = Fraction(k, n - k)  # k/n = l/(l+1)  <=>  k/(n-k) = l
    if q.denominator == 1:
        return HomotopyType.wedge_even(n - k - 1, int(q))
    return HomotopyType.odd_sphere(q.numerator // q.denominator)


@dataclass(frozen=True)
class AllowedTypes:
    """Realizable homotopy types of Cech complexes of n circle points at radius t."""

    n: int
    k: int  # floor(1/rho), rho = 1 - 2t

    def allows(self, ht: HomotopyType) -> bool:
        ht = ht.canonical()
        if ht.kind == "odd":
            return 2 * ht.l + 1 <= 2 * self.k - 1
        a, b = ht.a, ht.l
        if b + 1 <= self.k - 1 and (a + 1) * (self.k - b - 1) <= self.k:
            return True
        return b + 1 == self.k and (a + 1) * self.k <= self.n

    def max_wedge(self, b: int) -> int:
        """Largest allowed a+1 for wedge^a(S^2b); 0 when none is allowed."""
        if b + 1 <= self.k - 1:
            return self.k // (self.k - b - 1)
        if b + 1 == self.k:
            return self.n // self.k
        return 0


def allowed_types(n: int, t) -> AllowedTypes:
    if n < 1:
        raise DomainError("n must be >= 1")
    tq = Fraction(t)
    if not 0 < tq < Fraction(1, 2):
        raise DomainError("t must be in (0, 1/2)")
    rho = 1 - 2 * tq
    k = int(1 / rho)  # Fraction floor via int() is exact for positive values
    return AllowedTypes(n, k)
