"""Number theory of discriminants attached to special cubic fourfolds.

A smooth cubic fourfold is special when its middle algebraic cohomology
contains a rank-two positive-definite sublattice spanned by the square of
the hyperplane class and one extra algebraic surface class.  The
determinant d of that sublattice labels an irreducible divisor in moduli,
and everything about the existence of an associated K3 surface is decided
by plain arithmetic on d.  This module implements those decisions with
exact integers: which d occur at all, which admit a polarized K3 partner
in the Hodge-theoretic sense (Hassett's criterion), which admit a twisted
derived partner (a square-times-divisor factorisation), plus the
degree/genus bookkeeping shared by the Fano variety of lines and by the
order-3 quotient correspondence between polarized K3 moduli spaces.

Primality checks are deterministic trial division, which is exact and
entirely adequate at desk scale (d up to about 10**6).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import isqrt
from typing import Literal

H4_RANK = 23  # rank of the middle integral cohomology of a cubic fourfold
K3_RANK = 22  # rank of the full K3 lattice, transcendental part at most 21


def _require_positive(d: int, name: str = "d") -> None:
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise ValueError(f"{name} must be a positive integer, got {d!r}")


def has_labelling(d: int) -> bool:
    """True iff some special cubic fourfold carries a labelling of discriminant d.

    The nonempty divisors are exactly those with d >= 8 and d congruent to
    0 or 2 modulo 6.
    """
    _require_positive(d)
    return d >= 8 and d % 6 in (0, 2)


def is_hodge_admissible(d: int) -> bool:
    """Decide whether discriminant d admits a Hodge-theoretic K3 partner.

    Hassett's criterion: d must carry a labelling and be divisible by
    neither 4, 9, nor any odd prime p congruent to 2 modulo 3.  The prime
    2 itself is exempt; labelled discriminants are always even, and only
    divisibility by 4 is obstructive.
    """
    _require_positive(d)
    if not has_labelling(d):
        return False
    if d % 4 == 0 or d % 9 == 0:
        return False
    m = d
    while m % 2 == 0:
        m //= 2
    p = 3
    while p * p <= m:
        if m % p == 0:
            if p % 3 == 2:
                return False
            while m % p == 0:
                m //= p
        p += 2
    return not (m > 1 and m % 3 == 2)


def enumerate_hodge_admissible(bound: int) -> list[int]:
    """All discriminants d <= bound passing is_hodge_admissible, ascending."""
    _require_positive(bound, "bound")
    return [d for d in range(8, bound + 1) if is_hodge_admissible(d)]


@dataclass(frozen=True)
class TwistedWitness:
    """Certificate that d = f**2 * g with g dividing 2n**2 + 2n + 2."""

    f: int
    g: int
    n: int


def twisted_witness(d: int) -> TwistedWitness | None:
    """Search for a twisted derived K3 partner certificate for labelled d.

    Returns the lexicographically smallest (f, g, n) with d = f**2 * g,
    0 <= n < g and g | 2n**2 + 2n + 2, or None when no factorisation
    works.  Only labelled discriminants are meaningful inputs; others are
    rejected (with g = 1 every perfect square would qualify vacuously).
    """
    _require_positive(d)
    if not has_labelling(d):
        raise ValueError(f"d={d} carries no labelling; the twisted criterion does not apply")
    f = 1
    while f * f <= d:
        if d % (f * f) == 0:
            g = d // (f * f)
            for n in range(g):
                if (2 * n * n + 2 * n + 2) % g == 0:
                    return TwistedWitness(f, g, n)
        f += 1
    return None


def fano_hilbert_parameter(d: int) -> int | None:
    """The n >= 1 with d = 2(n**2 + n + 1), when d has that shape.

    For such d the Fano variety of lines of a generic member of the
    discriminant-d divisor is the Hilbert square of its degree-d K3
    partner, and the partner sits in projective space with genus
    n**2 + n + 2.
    """
    _require_positive(d)
    if d % 2:
        return None
    n = _param_of(d // 2)
    if n is None or n < 1:
        return None
    return n


def fano_hilbert_genus(n: int) -> int:
    """Genus n**2 + n + 2 of the degree-2(n**2+n+1) K3 partner."""
    _require_positive(n, "n")
    return n * n + n + 2


def _param_of(q: int) -> int | None:
    """Integer n >= 0 with n**2 + n + 1 == q, if one exists."""
    t = q - 1
    if t < 0:
        return None
    n = (isqrt(4 * t + 1) - 1) // 2
    return n if n * n + n == t else None


class RankVerdict(Enum):
    VERY_GENERAL = "very_general"
    UNCONSTRAINED = "unconstrained"
    FORCES_HODGE_K3 = "forces_hodge_k3"


@dataclass(frozen=True)
class RankClassification:
    rank_a: int
    verdict: RankVerdict


def classify_by_rank(rank_a: int) -> RankClassification:
    """What the rank of the algebraic middle cohomology forces by itself.

    Rank 1 is the very-general case: no associated K3 in any sense, since
    the transcendental part has rank 22, one more than any K3 allows.
    Rank >= 12 leaves the transcendental part small enough to embed
    primitively into the K3 lattice, forcing a Hodge-theoretic partner.
    Ranks 2 through 11 decide nothing either way.
    """
    if not isinstance(rank_a, int) or isinstance(rank_a, bool) or not 1 <= rank_a <= H4_RANK:
        raise ValueError(f"rank must be an integer in [1, {H4_RANK}], got {rank_a!r}")
    if rank_a == 1:
        verdict = RankVerdict.VERY_GENERAL
    elif rank_a >= 12:
        verdict = RankVerdict.FORCES_HODGE_K3
    else:
        verdict = RankVerdict.UNCONSTRAINED
    return RankClassification(rank_a, verdict)


@dataclass(frozen=True)
class DiscriminantReport:
    """Everything this library can say about one discriminant."""

    d: int
    has_labelling: bool
    hodge_associated: bool
    twisted_witness: TwistedWitness | None
    fano_hilbert_n: int | None
    genus: int | None


def discriminant_report(d: int) -> DiscriminantReport:
    labelled = has_labelling(d)
    n = fano_hilbert_parameter(d)
    return DiscriminantReport(
        d=d,
        has_labelling=labelled,
        hodge_associated=is_hodge_admissible(d),
        twisted_witness=twisted_witness(d) if labelled else None,
        fano_hilbert_n=n,
        genus=fano_hilbert_genus(n) if n is not None else None,
    )


Direction = Literal["forward", "backward"]


@dataclass(frozen=True)
class QuotientCorrespondence:
    """Degrees and genera matched by an order-3 symplectic K3 quotient.

    A K3 surface with a symplectic automorphism of order 3 and an
    invariant polarization of degree 2d yields, on the resolved quotient,
    a polarization of degree 6d, and conversely a degree-6e polarization
    descends from one of degree 2e on the triple cover.  Genera are
    reported when the relevant degree has the 2(n**2+n+1) shape that
    pairs the correspondence with labelled cubic fourfolds.
    """

    direction: str
    half_degree: int
    source_degree: int
    partner_degree: int
    source_genus: int | None
    partner_genus: int | None


def quotient_partner_genus(m: int) -> int:
    """Genus (m**2 + m + 1)/3 + 1 of the degree-2e quotient partner.

    Integral only for m congruent to 1 modulo 3; anything else is
    rejected rather than rounded.
    """
    _require_positive(m, "m")
    q = m * m + m + 1
    if q % 3:
        raise ValueError(f"(m**2+m+1)/3 is not integral for m={m}; need m = 1 (mod 3)")
    return q // 3 + 1


def quotient_correspondence(direction: Direction, half_degree: int) -> QuotientCorrespondence:
    """Match polarization degrees across an order-3 symplectic quotient.

    forward: the source K3 has degree 2*half_degree and the quotient
    partner degree 6*half_degree; when half_degree = n**2 + n + 1 the
    genera are n**2 + n + 2 and 3n**2 + 3n + 4.  backward: the source has
    degree 6*half_degree and the partner degree 2*half_degree; when
    3*half_degree = m**2 + m + 1 the genera are m**2 + m + 2 and
    (m**2 + m + 1)/3 + 1.
    """
    _require_positive(half_degree, "half_degree")
    if direction == "forward":
        source, partner = 2 * half_degree, 6 * half_degree
        n = _param_of(half_degree)
        if n is not None and n >= 1:
            return QuotientCorrespondence(direction, half_degree, source, partner,
                                          n * n + n + 2, 3 * n * n + 3 * n + 4)
        return QuotientCorrespondence(direction, half_degree, source, partner, None, None)
    if direction == "backward":
        source, partner = 6 * half_degree, 2 * half_degree
        m = _param_of(3 * half_degree)
        if m is not None and m >= 1:
            return QuotientCorrespondence(direction, half_degree, source, partner,
                                          m * m + m + 2, quotient_partner_genus(m))
        return QuotientCorrespondence(direction, half_degree, source, partner, None, None)
    raise ValueError(f"direction must be 'forward' or 'backward', got {direction!r}")
