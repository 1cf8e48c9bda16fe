"""Circle geometry: point configurations, the simplex predicate, exact
per-sample Euler characteristics, and coverage.

Positions live on the unit-circumference circle [0, 1).  They may be floats
or exact Fractions (equally spaced configurations use Fractions so that
boundary ties are decided exactly); all predicates are pure comparisons and
work with either.  Tie conventions follow closed arcs: a subset spans a
simplex iff its maximum cyclic gap is >= 1 - 2t, and arcs of radius rho
cover iff every gap is <= 2 rho.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, PointFileError, SizeError

_ENUM_GUARD = 20  # build_complex enumerates 2^n subsets


@dataclass(frozen=True)
class PointConfig:
    """Sorted, deduplicated finite point set on the circle."""

    positions: tuple

    def __post_init__(self):
        if not self.positions:
            raise DomainError("empty point configuration")

    @staticmethod
    def from_points(points) -> "PointConfig":
        pts = sorted(set(points))
        for p in pts:
            if not 0 <= p < 1:
                raise DomainError(f"position {p} outside [0, 1)")
        return PointConfig(tuple(pts))

    @property
    def n(self) -> int:
        return len(self.positions)

    def gaps(self) -> tuple:
        """Cyclic gaps between consecutive points; they sum to 1."""
        xs = self.positions
        if len(xs) == 1:
            return (1,)
        out = [b - a for a, b in zip(xs, xs[1:])]
        out.append(1 - xs[-1] + xs[0])
        return tuple(out)

    def max_gap(self):
        return max(self.gaps())


def uniform_config(n: int) -> PointConfig:
    """n equally spaced points i/n, held as exact rationals."""
    if n < 1:
        raise DomainError("n must be >= 1")
    return PointConfig(tuple(Fraction(i, n) for i in range(n)))


def sample_uniform(n: int, rng) -> PointConfig:
    """n i.i.d. uniform points from the supplied numpy Generator."""
    if n < 1:
        raise DomainError("n must be >= 1")
    return PointConfig.from_points(float(x) for x in rng.random(n))


def is_simplex(config: PointConfig, subset, t) -> bool:
    """True iff closed arcs of radius t centered at the subset intersect.

    Equivalently, the subset's maximum cyclic gap is >= 1 - 2t (ties count).
    ``subset`` is an iterable of vertex indices into the configuration.
    """
    idx = sorted(set(subset))
    if not idx:
        raise DomainError("empty subset")
    xs = config.positions
    pts = [xs[i] for i in idx]
    if len(pts) == 1:
        return True  # single gap is the whole circle, 1 >= 1 - 2t
    mg = max(b - a for a, b in zip(pts, pts[1:]))
    mg = max(mg, 1 - pts[-1] + pts[0])
    return mg >= 1 - 2 * t


def covers_circle(config: PointConfig, radius) -> bool:
    """True iff closed arcs of the given radius cover the circle (ties covered)."""
    if radius <= 0:
        raise DomainError("radius must be > 0")
    return config.max_gap() <= 2 * radius


def window_counts(config: PointConfig, t) -> list[int]:
    """For each point, how many further points lie in the closed forward arc
    of length 2t starting there (capped at n-1).  Two-pointer, O(n)."""
    xs = config.positions
    n = len(xs)
    width = 2 * t
    ext = list(xs) + [x + 1 for x in xs]
    counts = [0] * n
    e = 0
    for i in range(n):
        if e < i + 1:
            e = i + 1
        while e < i + n and ext[e] - ext[i] <= width:
            e += 1
        counts[i] = e - i - 1
    return counts


def euler_char_exact(config: PointConfig, t) -> int:
    """Exact Euler characteristic of Cech(config, t) via the gap DP.

    chi = sum_s (-1)^(s-1) N_s with N_s = C(n,s) - M_s, where M_s counts
    s-subsets all of whose cyclic gaps are < 1 - 2t.  The DP fixes the
    lowest-index chosen point and runs a prefix-sum-accelerated chain count
    over the remaining points; the alternating sum over s is accumulated
    directly inside the DP (each added point flips the sign), so the whole
    computation is O(n^2) in exact integer arithmetic.
    """
    return _euler_from_sorted(config.positions, 1 - 2 * t)


def _euler_from_sorted(xs, rho) -> int:
    if rho <= 0:
        return 1  # full simplex
    n = len(xs)
    total = 0  # sum over subsets with all cyclic gaps < rho of (-1)^{|S|}
    for i in range(n):
        xi = xs[i]
        # h[j] = signed count of index-increasing chains i = j_0 < ... < j_last = j
        # with consecutive position gaps < rho; sign is (-1)^(chain length).
        pref = [0] * (n + 1)  # pref[j+1] = h[i] + ... + h[j]
        pref[i + 1] = -1
        lo = i
        for j in range(i + 1, n):
            while xs[j] - xs[lo] >= rho:
                lo += 1
            hj = -(pref[j] - pref[lo]) if lo < j else 0
            pref[j + 1] = pref[j] + hj
            if hj and 1 - (xs[j] - xi) < rho:
                total += hj
    return 1 + total


# ---------------------------------------------------------------------------
# Oracle materialization (small n only)
# ---------------------------------------------------------------------------

def build_complex(config: PointConfig, t):
    """Materialize Cech(config, t) as an explicit simplex list (n <= 20).

    Simplices are exactly the nonempty subsets of the closed windows of
    length 2t, so the complex is face-closed by construction.
    """
    from .homology import SimplicialComplex

    n = config.n
    if n > _ENUM_GUARD:
        raise SizeError(f"build_complex limited to n <= {_ENUM_GUARD}, got {n}")
    counts = window_counts(config, t)
    if 1 - 2 * t <= 0 or config.max_gap() >= 1 - 2 * t:
        full = (1 << n) - 1
        masks = _submasks_of(full, n)
        return SimplicialComplex(n, sorted(masks))
    window_masks = []
    for i, c in enumerate(counts):
        mask = 0
        for d in range(c + 1):
            mask |= 1 << ((i + d) % n)
        window_masks.append(mask)
    maximal = [
        w for w in window_masks
        if not any(o != w and o | w == o for o in window_masks)
    ]
    masks: set[int] = set()
    for w in maximal:
        masks.update(_submasks_of(w, n))
    return SimplicialComplex(n, sorted(masks))


def _submasks_of(mask: int, n: int):
    out = []
    sub = mask
    while sub:
        out.append(sub)
        sub = (sub - 1) & mask
    return out


# ---------------------------------------------------------------------------
# Point-file format: one decimal in [0,1) per line, '#' comments allowed.
# ---------------------------------------------------------------------------

def load_point_file(path) -> PointConfig:
    points = []
    with open(path) as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                value = float(line)
            except ValueError:
                raise PointFileError(line_no, f"not a decimal: {line!r}") from None
            if not 0 <= value < 1:
                raise PointFileError(line_no, f"value {value} outside [0, 1)")
            points.append(value)
    if not points:
        raise PointFileError(0, "no points in file")
    return PointConfig.from_points(points)
