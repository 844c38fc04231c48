"""Sparse exact cubic forms in six variables x0..x5.

A form is a finite map from exponent vectors (six nonnegative integers
summing to 3) to nonzero rational coefficients.  All evaluation is exact
over fractions.Fraction; there is no floating point anywhere.

The module also ships a small expression grammar for forms:

    form  := ['+'|'-'] term (('+'|'-') term)*
    term  := [coefficient ['*']] factor*
    coefficient := INT ['/' INT]
    factor := VAR ['^' INT]            VAR is x0 .. x5

Factors are juxtaposed with optional '*' separators, e.g.
"x0^3 - 2/3*x1^2 x2 + x3 x4 x5".  Every term must have total degree
exactly 3; anything else is rejected with the offending position.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

NUM_VARIABLES = 6
DEGREE = 3
MONOMIAL_COUNT = 56

Exponents = tuple[int, int, int, int, int, int]
Scalar = Union[int, Fraction]


def _build_basis() -> tuple[Exponents, ...]:
    basis = []
    for i in range(NUM_VARIABLES):
        for j in range(i, NUM_VARIABLES):
            for k in range(j, NUM_VARIABLES):
                e = [0] * NUM_VARIABLES
                e[i] += 1
                e[j] += 1
                e[k] += 1
                basis.append(tuple(e))
    return tuple(sorted(basis, reverse=True))


_BASIS: tuple[Exponents, ...] = _build_basis()
_BASIS_INDEX: dict[Exponents, int] = {e: i for i, e in enumerate(_BASIS)}


def monomial_basis() -> tuple[Exponents, ...]:
    """The 56 degree-3 exponent vectors, descending lexicographically.

    The first entry is (3, 0, 0, 0, 0, 0) and the last (0, 0, 0, 0, 0, 3).
    """
    return _BASIS


def _check_exponents(e: object) -> Exponents:
    if (
        not isinstance(e, tuple)
        or len(e) != NUM_VARIABLES
        or not all(isinstance(x, int) and not isinstance(x, bool) and x >= 0 for x in e)
        or sum(e) != DEGREE
    ):
        raise ValueError(
            f"exponent vector must be {NUM_VARIABLES} nonnegative integers "
            f"summing to {DEGREE}, got {e!r}"
        )
    return e  # type: ignore[return-value]


@dataclass(frozen=True)
class CubicForm:
    """Immutable sparse cubic form; terms are kept in monomial basis order."""

    terms: tuple[tuple[Exponents, Fraction], ...]

    def __post_init__(self) -> None:
        last = -1
        for e, c in self.terms:
            _check_exponents(e)
            if not isinstance(c, Fraction) or c == 0:
                raise ValueError(f"coefficients must be nonzero Fractions, got {c!r}")
            idx = _BASIS_INDEX[e]
            if idx <= last:
                raise ValueError("terms must be strictly in monomial basis order")
            last = idx

    @classmethod
    def from_coefficients(cls, mapping: Mapping[Sequence[int], Scalar]) -> "CubicForm":
        """Build a form from {exponents: coefficient}; zero coefficients drop out."""
        clean: dict[Exponents, Fraction] = {}
        for e, c in mapping.items():
            key = _check_exponents(tuple(e))
            value = Fraction(c)
            if value:
                clean[key] = value
        ordered = sorted(clean, key=_BASIS_INDEX.__getitem__)
        return cls(tuple((e, clean[e]) for e in ordered))

    @classmethod
    def parse(cls, text: str) -> "CubicForm":
        return parse_cubic_form(text)

    @classmethod
    def zero(cls) -> "CubicForm":
        return cls(())

    def as_dict(self) -> dict[Exponents, Fraction]:
        return dict(self.terms)

    def coefficient(self, exponents: Sequence[int]) -> Fraction:
        key = _check_exponents(tuple(exponents))
        return dict(self.terms).get(key, Fraction(0))

    @property
    def monomials(self) -> tuple[Exponents, ...]:
        return tuple(e for e, _ in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> frozenset[int]:
        """Indices of the variables that actually occur."""
        return frozenset(i for e, _ in self.terms for i in range(NUM_VARIABLES) if e[i])

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        p = _check_point(point)
        total = Fraction(0)
        for e, c in self.terms:
            value = c
            for i in range(NUM_VARIABLES):
                for _ in range(e[i]):
                    value *= p[i]
            total += value
        return total

    def gradient(self, point: Sequence[Scalar]) -> tuple[Fraction, ...]:
        """The six partial derivatives evaluated at the point."""
        p = _check_point(point)
        partials = [Fraction(0)] * NUM_VARIABLES
        for e, c in self.terms:
            for i in range(NUM_VARIABLES):
                if e[i] == 0:
                    continue
                value = c * e[i]
                for j in range(NUM_VARIABLES):
                    power = e[j] - 1 if j == i else e[j]
                    for _ in range(power):
                        value *= p[j]
                partials[i] += value
        return tuple(partials)

    def restrict(self, variables: Iterable[int]) -> "CubicForm":
        """Set every variable outside the given index set to zero."""
        keep = set(variables)
        if not keep <= set(range(NUM_VARIABLES)):
            raise ValueError(f"variable indices must lie in 0..{NUM_VARIABLES - 1}")
        kept = tuple(
            (e, c)
            for e, c in self.terms
            if all(e[i] == 0 for i in range(NUM_VARIABLES) if i not in keep)
        )
        return CubicForm(kept)

    def __add__(self, other: "CubicForm") -> "CubicForm":
        if not isinstance(other, CubicForm):
            return NotImplemented
        merged = dict(self.terms)
        for e, c in other.terms:
            merged[e] = merged.get(e, Fraction(0)) + c
        return CubicForm.from_coefficients(merged)

    def __neg__(self) -> "CubicForm":
        return CubicForm(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "CubicForm") -> "CubicForm":
        if not isinstance(other, CubicForm):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar: Scalar) -> "CubicForm":
        if not isinstance(scalar, (int, Fraction)) or isinstance(scalar, bool):
            return NotImplemented
        s = Fraction(scalar)
        if s == 0:
            return CubicForm(())
        return CubicForm(tuple((e, c * s) for e, c in self.terms))

    __rmul__ = __mul__

    def to_expression(self) -> str:
        """Render in the grammar accepted by parse_cubic_form."""
        if not self.terms:
            return "0"
        parts = []
        for index, (e, c) in enumerate(self.terms):
            magnitude = abs(c)
            mono = " ".join(
                f"x{i}" + (f"^{e[i]}" if e[i] > 1 else "")
                for i in range(NUM_VARIABLES)
                if e[i]
            )
            body = mono if magnitude == 1 else f"{magnitude}*{mono}"
            if index == 0:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.to_expression()


def _check_point(point: Sequence[Scalar]) -> tuple[Fraction, ...]:
    values = tuple(point)
    if len(values) != NUM_VARIABLES:
        raise ValueError(f"point must have {NUM_VARIABLES} coordinates, got {len(values)}")
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class SmoothnessReport:
    """Trial points at which the form and all six partials vanish.

    This is a falsifier only.  A witness certifies a singular point of the
    projective hypersurface; an empty list proves nothing.
    """

    singular_witnesses: tuple[tuple[Fraction, ...], ...]


def smoothness_probe(form: CubicForm, trial_points: Iterable[Sequence[Scalar]]) -> SmoothnessReport:
    witnesses = []
    for raw in trial_points:
        p = _check_point(raw)
        if all(v == 0 for v in p):
            continue  # not a projective point
        if form.evaluate(p) == 0 and all(g == 0 for g in form.gradient(p)):
            witnesses.append(p)
    return SmoothnessReport(tuple(witnesses))


class FormParseError(ValueError):
    """Raised on malformed form expressions; carries the source position."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at position {position})")


def _tokenize(text: str) -> list[tuple[str, int, int]]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
            continue
        if c == "x":
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise FormParseError("expected a variable index after 'x'", i)
            index = int(text[i + 1 : j])
            if index >= NUM_VARIABLES:
                raise FormParseError(f"variable x{index} out of range (x0..x5)", i)
            tokens.append(("var", index, i))
            i = j
            continue
        if c in "+-*/^":
            tokens.append(("op", c, i))
            i += 1
            continue
        raise FormParseError(f"unexpected character {c!r}", i)
    return tokens


def parse_cubic_form(text: str) -> CubicForm:
    """Parse the expression grammar documented in the module docstring.

    Coefficients of equal monomials accumulate; terms cancelling to zero
    are dropped, so "x0^3 - x0^3" parses to the zero form.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise FormParseError("empty expression", 0)
    coefficients: dict[Exponents, Fraction] = {}
    i = 0
    while i < len(tokens):
        sign = 1
        while i < len(tokens) and tokens[i][0] == "op" and tokens[i][1] in "+-":
            if tokens[i][1] == "-":
                sign = -sign
            i += 1
        if i >= len(tokens):
            raise FormParseError("dangling sign at end of expression", tokens[-1][2])
        term_pos = tokens[i][2]
        coefficient = Fraction(sign)
        exponents = [0] * NUM_VARIABLES
        saw_factor = False
        if tokens[i][0] == "int":
            numerator = tokens[i][1]
            i += 1
            denominator = 1
            if i < len(tokens) and tokens[i][0] == "op" and tokens[i][1] == "/":
                slash_pos = tokens[i][2]
                i += 1
                if i >= len(tokens) or tokens[i][0] != "int":
                    raise FormParseError("expected an integer denominator after '/'", slash_pos)
                denominator = tokens[i][1]
                if denominator == 0:
                    raise FormParseError("zero denominator", slash_pos)
                i += 1
            coefficient *= Fraction(numerator, denominator)
            saw_factor = True
            if i < len(tokens) and tokens[i][0] == "op" and tokens[i][1] == "*":
                i += 1
        while i < len(tokens) and tokens[i][0] == "var":
            index = tokens[i][1]
            i += 1
            power = 1
            if i < len(tokens) and tokens[i][0] == "op" and tokens[i][1] == "^":
                caret_pos = tokens[i][2]
                i += 1
                if i >= len(tokens) or tokens[i][0] != "int":
                    raise FormParseError("expected an integer exponent after '^'", caret_pos)
                power = tokens[i][1]
                i += 1
            exponents[index] += power
            saw_factor = True
            if i < len(tokens) and tokens[i][0] == "op" and tokens[i][1] == "*":
                i += 1
        if not saw_factor:
            raise FormParseError("expected a term", term_pos)
        degree = sum(exponents)
        if degree != DEGREE:
            raise FormParseError(f"term has degree {degree}, expected {DEGREE}", term_pos)
        key: Exponents = tuple(exponents)  # type: ignore[assignment]
        coefficients[key] = coefficients.get(key, Fraction(0)) + coefficient
        if i < len(tokens) and not (tokens[i][0] == "op" and tokens[i][1] in "+-"):
            raise FormParseError("expected '+' or '-' between terms", tokens[i][2])
    return CubicForm.from_coefficients(coefficients)


def _cube(i: int) -> Exponents:
    e = [0] * NUM_VARIABLES
    e[i] = 3
    return tuple(e)  # type: ignore[return-value]


def _square_times(i: int, j: int) -> Exponents:
    e = [0] * NUM_VARIABLES
    e[i] += 2
    e[j] += 1
    return tuple(e)  # type: ignore[return-value]


# Sum of the six cubes; maximal symmetry among diagonal cubics.
FERMAT_CUBIC = CubicForm.from_coefficients({_cube(i): 1 for i in range(NUM_VARIABLES)})

# Five-variable cyclic chain of square-times-next terms plus a sixth cube.
KLEIN_CUBIC = CubicForm.from_coefficients(
    {
        _square_times(0, 1): 1,
        _square_times(1, 2): 1,
        _square_times(2, 3): 1,
        _square_times(3, 4): 1,
        _square_times(4, 0): 1,
        _cube(5): 1,
    }
)


def _clebsch() -> CubicForm:
    # sum of cubes minus the cube of the sum; the pure cubes cancel,
    # leaving -3 x_i^2 x_j (i != j) and -6 x_i x_j x_k (i < j < k)
    coefficients: dict[Exponents, int] = {}
    for i in range(NUM_VARIABLES):
        for j in range(NUM_VARIABLES):
            if i != j:
                coefficients[_square_times(i, j)] = -3
    for i in range(NUM_VARIABLES):
        for j in range(i + 1, NUM_VARIABLES):
            for k in range(j + 1, NUM_VARIABLES):
                e = [0] * NUM_VARIABLES
                e[i] = e[j] = e[k] = 1
                coefficients[tuple(e)] = -6  # type: ignore[index]
    return CubicForm.from_coefficients(coefficients)


CLEBSCH_CUBIC = _clebsch()
