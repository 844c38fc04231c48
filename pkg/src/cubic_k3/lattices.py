"""Exact integer symmetric bilinear forms for middle-cohomology sublattices.

Determinants are computed by Bareiss fraction-free elimination, so every
intermediate value is an integer and nothing is ever rounded.  Positive
definiteness uses the Sylvester criterion on leading principal minors.
Sizes are capped at 23, the rank of the middle cohomology lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

MAX_RANK = 23

# self-intersection of the square of the hyperplane class on a cubic fourfold
H2_SELF_INTERSECTION = 3


def _det_bareiss(rows: list[list[int]]) -> int:
    """Determinant by fraction-free Gaussian elimination.

    Every division below is exact; the pivots divide the updated entries
    by construction, which is the point of the Bareiss scheme.
    """
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix has no determinant here")
    a = [list(row) for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class GramMatrix:
    """Symmetric integer Gram matrix of a sublattice, size 1..23."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        if not 1 <= n <= MAX_RANK:
            raise ValueError(f"size must lie in [1, {MAX_RANK}], got {n}")
        for row in self.entries:
            if len(row) != n:
                raise ValueError("entries must form a square matrix")
            for x in row:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise ValueError(f"entries must be integers, got {x!r}")
        for i in range(n):
            for j in range(i + 1, n):
                if self.entries[i][j] != self.entries[j][i]:
                    raise ValueError(
                        f"matrix is not symmetric at ({i}, {j}): "
                        f"{self.entries[i][j]} != {self.entries[j][i]}"
                    )

    @classmethod
    def of(cls, rows: Sequence[Sequence[int]]) -> "GramMatrix":
        return cls(tuple(tuple(row) for row in rows))

    @property
    def size(self) -> int:
        return len(self.entries)

    def determinant(self) -> int:
        return _det_bareiss([list(row) for row in self.entries])

    def leading_principal_minors(self) -> tuple[int, ...]:
        """Determinants of the upper-left k-by-k blocks, k = 1..size."""
        return tuple(
            _det_bareiss([list(row[:k]) for row in self.entries[:k]])
            for k in range(1, self.size + 1)
        )

    def is_positive_definite(self) -> bool:
        return all(m > 0 for m in self.leading_principal_minors())


@dataclass(frozen=True)
class Labelling:
    """Rank-two sublattice spanned by the hyperplane square and a surface class.

    Stores the two free intersection numbers; the self-intersection of the
    hyperplane square is always 3.  Primitivity of the sublattice is an
    assumption carried along as a flag, never verified here.
    """

    v_dot_v: int
    v_dot_h2: int
    assumes_primitive: bool = True

    def gram(self) -> GramMatrix:
        a = self.v_dot_h2
        return GramMatrix.of([[H2_SELF_INTERSECTION, a], [a, self.v_dot_v]])

    def discriminant(self) -> int:
        return H2_SELF_INTERSECTION * self.v_dot_v - self.v_dot_h2 * self.v_dot_h2

    def is_positive_definite(self) -> bool:
        # leading 1x1 minor is the constant 3, so only the determinant matters
        return self.discriminant() > 0


def labelling_discriminant(v_dot_v: int, v_dot_h2: int) -> int:
    """Determinant 3*v.v - (v.h^2)**2 of the labelling Gram matrix."""
    return Labelling(v_dot_v, v_dot_h2).discriminant()


def transcendental_rank(rank_a: int) -> int:
    """Rank 23 - rank_a of the orthogonal complement of the algebraic part."""
    if not isinstance(rank_a, int) or isinstance(rank_a, bool) or not 1 <= rank_a <= MAX_RANK:
        raise ValueError(f"rank must be an integer in [1, {MAX_RANK}], got {rank_a!r}")
    return MAX_RANK - rank_a
