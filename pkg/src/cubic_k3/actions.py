"""Diagonal finite-order actions on cubic forms and their fixed loci.

An order-n diagonal automorphism scales coordinate i by the w_i-th power
of a primitive n-th root of unity.  Everything observable here lives in
the exponents: a monomial x^e is scaled by residue <w, e> mod n, so the
56 cubic monomials split into eigenclasses by residue, the invariant
family attached to an eigenvalue has a dimension given by pure counting,
and the fixed locus in projective five-space is the disjoint union of the
coordinate subspaces on which the weight is constant.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from random import Random

from .forms import CubicForm, Exponents, NUM_VARIABLES, monomial_basis


@dataclass(frozen=True)
class DiagonalAutomorphism:
    """Order-n coordinate scaling with weight w_i on coordinate i.

    Weights are reduced into [0, n) on construction.  All six weights
    equal means the action on projective space is trivial; that is
    permitted but flagged, since the formulas below still make sense for
    the identity (they then describe the full moduli of cubics).
    """

    order: int
    weights: tuple[int, int, int, int, int, int]

    def __post_init__(self) -> None:
        if not isinstance(self.order, int) or isinstance(self.order, bool) or self.order < 1:
            raise ValueError(f"order must be a positive integer, got {self.order!r}")
        ws = tuple(self.weights)
        if len(ws) != NUM_VARIABLES or not all(
            isinstance(w, int) and not isinstance(w, bool) for w in ws
        ):
            raise ValueError(f"weights must be {NUM_VARIABLES} integers, got {self.weights!r}")
        object.__setattr__(self, "weights", tuple(w % self.order for w in ws))

    @property
    def is_projectively_trivial(self) -> bool:
        return len(set(self.weights)) == 1

    @property
    def weight_multiplicities(self) -> dict[int, int]:
        """How many coordinates carry each occurring weight value."""
        counts = Counter(self.weights)
        return {w: counts[w] for w in sorted(counts)}

    @property
    def determinant_weight(self) -> int:
        """Residue of the determinant of the coordinate scaling."""
        return sum(self.weights) % self.order


def monomial_weight(exponents: Exponents, auto: DiagonalAutomorphism) -> int:
    """Residue <w, e> mod n by which the action scales the monomial x^e."""
    return sum(w * e for w, e in zip(auto.weights, exponents)) % auto.order


def eigen_decomposition(auto: DiagonalAutomorphism) -> dict[int, tuple[Exponents, ...]]:
    """Partition of the 56 cubic monomials by weight residue.

    Keys are the residues that actually occur, ascending; values keep
    monomial basis order.  Class sizes always sum to 56.
    """
    classes: dict[int, list[Exponents]] = {}
    for e in monomial_basis():
        classes.setdefault(monomial_weight(e, auto), []).append(e)
    return {k: tuple(classes[k]) for k in sorted(classes)}


def eigen_class_sizes(auto: DiagonalAutomorphism) -> dict[int, int]:
    return {k: len(v) for k, v in eigen_decomposition(auto).items()}


def is_eigenform(form: CubicForm, auto: DiagonalAutomorphism) -> int | None:
    """The common weight residue of the form's monomials, or None if mixed.

    The zero form is rejected; it is an eigenform for every eigenvalue at
    once and carries no information.
    """
    if form.is_zero():
        raise ValueError("the zero form has no well-defined eigenvalue")
    residues = {monomial_weight(e, auto) for e in form.monomials}
    if len(residues) == 1:
        return residues.pop()
    return None


def is_symplectic(auto: DiagonalAutomorphism, eigenvalue: int) -> bool:
    """Whether the induced action on the Fano variety preserves the 2-form.

    The holomorphic 2-form of the Fano variety of lines is scaled by
    det(a) / lambda**2 where lambda is the scalar by which a acts on the
    defining equation.  In weight residues that scaling is trivial exactly
    when sum(w) - 2*eigenvalue vanishes mod n.
    """
    return (sum(auto.weights) - 2 * eigenvalue) % auto.order == 0


@dataclass(frozen=True)
class DimensionBreakdown:
    """The counting behind a family dimension, kept for reporting."""

    eigen_count: int          # monomials in the chosen eigenclass
    stabilizer_blocks: int    # sum of squared weight multiplicities
    raw: int                  # eigen_count - stabilizer_blocks, may be negative
    dimension: int            # raw clamped at 0
    degenerate: bool          # True when clamping happened


def family_dimension_breakdown(auto: DiagonalAutomorphism, eigenvalue: int) -> DimensionBreakdown:
    k = eigenvalue % auto.order
    count = len(eigen_decomposition(auto).get(k, ()))
    blocks = sum(m * m for m in auto.weight_multiplicities.values())
    raw = count - blocks
    return DimensionBreakdown(
        eigen_count=count,
        stabilizer_blocks=blocks,
        raw=raw,
        dimension=max(raw, 0),
        degenerate=raw < 0,
    )


def family_dimension(auto: DiagonalAutomorphism, eigenvalue: int) -> int:
    """Moduli dimension of the eigenvalue-k family of invariant cubics.

    Projectivizing the eigenclass gives count - 1 parameters; the
    subgroup of the projective linear group commuting with the action is
    the product of general linear blocks on equal-weight coordinates,
    of projective dimension (sum of squared multiplicities) - 1.  The
    difference of the two is count - sum m_b^2.  Empty eigenclasses give
    a negative raw value, clamped to 0 and flagged in the breakdown.
    """
    return family_dimension_breakdown(auto, eigenvalue).dimension


class IntersectionKind(Enum):
    """How a fixed projective subspace meets the invariant cubic.

    EMPTY is part of the vocabulary but never produced: a fixed subspace
    of positive dimension always meets a cubic hypersurface, and the
    empty intersection in dimension 0 is reported as POINT_OFF_X.
    """

    CONTAINED_IN_X = "contained_in_x"
    HYPERSURFACE = "hypersurface"
    TRIPLE_POINTS = "points"
    POINT_ON_X = "point_on_x"
    POINT_OFF_X = "point_off_x"
    EMPTY = "empty"


@dataclass(frozen=True)
class OnX:
    """Classification of one fixed component against the cubic."""

    kind: IntersectionKind
    restriction: CubicForm | None = None
    point_count: int | None = None


@dataclass(frozen=True)
class FixedLocusComponent:
    """One coordinate subspace fixed pointwise by the diagonal action.

    variables are the coordinate indices sharing the weight eigen_weight;
    the component is the projective subspace spanned by them, of dimension
    ambient_dim = len(variables) - 1.  on_x is None for ambient-only
    listings and carries the intersection classification otherwise.
    """

    eigen_weight: int
    variables: tuple[int, ...]
    ambient_dim: int
    on_x: OnX | None = None

    def __post_init__(self) -> None:
        if self.ambient_dim != len(self.variables) - 1:
            raise ValueError("ambient_dim must be len(variables) - 1")


def fixed_locus_ambient(auto: DiagonalAutomorphism) -> tuple[FixedLocusComponent, ...]:
    """Fixed subspaces of projective five-space, ordered by weight value.

    One component per occurring weight; their projective dimensions plus
    one sum to six, since the components partition the coordinates.
    """
    components = []
    for value in sorted(set(auto.weights)):
        variables = tuple(i for i in range(NUM_VARIABLES) if auto.weights[i] == value)
        components.append(
            FixedLocusComponent(
                eigen_weight=value,
                variables=variables,
                ambient_dim=len(variables) - 1,
            )
        )
    return tuple(components)


def fixed_locus_on_hypersurface(
    form: CubicForm, auto: DiagonalAutomorphism
) -> tuple[FixedLocusComponent, ...]:
    """Classify each ambient fixed component against the cubic X = {form = 0}.

    The form must be an eigenform, else its zero locus is not invariant.
    Restricting to a component keeps the terms supported on its
    coordinates.  A single fixed point is on or off X by evaluation; for
    a fixed line a nonzero restriction is a binary cubic, hence three
    points with multiplicity; in higher dimension a nonzero restriction
    cuts a cubic hypersurface of the component; a vanishing restriction
    on a positive-dimensional component means the component lies on X.
    """
    if is_eigenform(form, auto) is None:
        raise ValueError("form is not an eigenform of the action; its zero locus is not invariant")
    out = []
    for component in fixed_locus_ambient(auto):
        restriction = form.restrict(component.variables)
        if component.ambient_dim == 0:
            index = component.variables[0]
            point = tuple(Fraction(1 if i == index else 0) for i in range(NUM_VARIABLES))
            on_x = OnX(
                kind=IntersectionKind.POINT_ON_X
                if form.evaluate(point) == 0
                else IntersectionKind.POINT_OFF_X
            )
        elif restriction.is_zero():
            on_x = OnX(kind=IntersectionKind.CONTAINED_IN_X)
        elif component.ambient_dim == 1:
            on_x = OnX(
                kind=IntersectionKind.TRIPLE_POINTS,
                restriction=restriction,
                point_count=3,
            )
        else:
            on_x = OnX(kind=IntersectionKind.HYPERSURFACE, restriction=restriction)
        out.append(replace(component, on_x=on_x))
    return tuple(out)


def generic_member(
    auto: DiagonalAutomorphism, eigenvalue: int, rng: Random | None = None
) -> CubicForm:
    """A member of the eigenvalue-k family with every class monomial present.

    With no generator the coefficients are all 1, which already keeps
    every restriction in fixed-locus computations nonzero.  Passing a
    seeded Random draws small nonzero rationals instead.
    """
    k = eigenvalue % auto.order
    monomials = eigen_decomposition(auto).get(k, ())
    if not monomials:
        raise ValueError(f"eigenvalue {eigenvalue} has an empty monomial class")
    if rng is None:
        coefficients = {e: Fraction(1) for e in monomials}
    else:
        coefficients = {
            e: Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9))
            for e in monomials
        }
    return CubicForm.from_coefficients(coefficients)


# Canonical diagonal actions of the named invariant families, keyed by the
# catalog family names: (automorphism, eigenvalue of the defining equation).
FAMILY_ACTIONS: dict[str, tuple[DiagonalAutomorphism, int]] = {
    "F1": (DiagonalAutomorphism(2, (0, 0, 0, 0, 0, 1)), 0),
    "F2": (DiagonalAutomorphism(2, (0, 0, 0, 0, 1, 1)), 0),
    "F3_inv": (DiagonalAutomorphism(2, (0, 0, 0, 1, 1, 1)), 0),
    "V1": (DiagonalAutomorphism(3, (0, 0, 0, 0, 0, 1)), 0),
    "V2": (DiagonalAutomorphism(3, (0, 0, 0, 0, 1, 1)), 0),
    "V3": (DiagonalAutomorphism(3, (0, 0, 0, 1, 1, 2)), 0),
    "V4": (DiagonalAutomorphism(3, (0, 0, 1, 1, 2, 2)), 1),
    "F3_symp3": (DiagonalAutomorphism(3, (0, 0, 0, 0, 1, 2)), 0),
    "G3": (DiagonalAutomorphism(3, (0, 0, 1, 1, 2, 2)), 0),
}
