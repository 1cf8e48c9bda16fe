"""Brute-force simplicial homology over GF(2); oracle-only representation.

Simplices are stored as vertex bitmasks.  Betti numbers come from boundary
matrix ranks: b_k = dim ker d_k - rank d_{k+1}, with matrices reduced by
Gaussian elimination on integer-packed rows.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, SizeError

_SIMPLEX_GUARD = 1 << 20


@dataclass(frozen=True)
class SimplicialComplex:
    """Explicit simplex list over a small vertex set, closed under faces."""

    vertex_count: int
    simplices: list[int]  # nonempty vertex bitmasks

    def __post_init__(self):
        if any(m == 0 for m in self.simplices):
            raise DomainError("empty simplex in complex")

    @property
    def simplex_count(self) -> int:
        return len(self.simplices)

    def dimension(self) -> int:
        return max(m.bit_count() for m in self.simplices) - 1

    def by_dimension(self) -> list[list[int]]:
        layers: list[list[int]] = [[] for _ in range(self.dimension() + 1)]
        for m in self.simplices:
            layers[m.bit_count() - 1].append(m)
        return layers

    def euler_characteristic(self) -> int:
        return sum(-1 if m.bit_count() % 2 == 0 else 1 for m in self.simplices)

    def check_face_closure(self) -> bool:
        have = set(self.simplices)
        for m in self.simplices:
            v = m
            while v:
                low = v & -v
                if m ^ low and (m ^ low) not in have:
                    return False
                v ^= low
        return True


def _gf2_rank(rows: list[int]) -> int:
    pivots: dict[int, int] = {}  # leading bit -> reduced row
    for row in rows:
        while row:
            lead = row.bit_length() - 1
            pivot = pivots.get(lead)
            if pivot is None:
                pivots[lead] = row
                break
            row ^= pivot
    return len(pivots)


def betti_gf2(complex_: SimplicialComplex) -> tuple[int, ...]:
    """Betti numbers of the complex over the two-element field.

    Trailing zeros are trimmed; b_0 >= 1 for nonempty complexes.
    """
    if complex_.simplex_count > _SIMPLEX_GUARD:
        raise SizeError(
            f"complex has {complex_.simplex_count} simplices, "
            f"guard is {_SIMPLEX_GUARD}"
        )
    layers = complex_.by_dimension()
    dim = len(layers) - 1
    index = [{m: i for i, m in enumerate(layer)} for layer in layers]
    ranks = [0] * (dim + 2)  # ranks[d] = rank of boundary map from dim d
    for d in range(1, dim + 1):
        face_index = index[d - 1]
        rows = []
        for m in layers[d]:
            row = 0
            v = m
            while v:
                low = v & -v
                row |= 1 << face_index[m ^ low]
                v ^= low
            rows.append(row)
        ranks[d] = _gf2_rank(rows)
    betti = []
    for d in range(dim + 1):
        betti.append(len(layers[d]) - ranks[d] - ranks[d + 1])
    while len(betti) > 1 and betti[-1] == 0:
        betti.pop()
    return tuple(betti)
