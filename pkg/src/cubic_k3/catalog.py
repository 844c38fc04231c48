"""Curated records of cubic fourfold families and their recorded claims.

The catalog is a line-oriented text format.  A record opens with a
``[family <name>]`` header; the lines below it are ``key = value`` pairs.
Blank lines and lines starting with ``#`` are skipped.  Keys:

    order       positive integer, the order of the listed symmetry
    weights     six comma-separated residues in [0, order); needs order
    eigenvalue  residue in [0, order) of the defining equation; needs order
    dimension   nonnegative integer, moduli dimension of the family
    symplectic  true / false                                   (required)
    divisors    comma-separated labelling discriminants the family meets
    rank_A      integer in [1, 23], or a lower bound like >=13
    hodge       yes / no / unknown                             (required)
    twisted     yes / no / unknown                             (required)
    motivic     yes / no / unknown                             (required)
    rationality rational / conjecturally_irrational / open     (required)
    cite        free text, repeatable; anchors a claim to the literature

Anything else is an error.  Statuses are recorded claims, not
computations; ``validate_record`` recomputes whatever the stored data
permits (dimension, symplectic type, divisor arithmetic, rank forcing)
and reports agreement check by check.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from importlib import resources
from pathlib import Path

from .actions import DiagonalAutomorphism, family_dimension, is_symplectic
from .discriminants import (
    RankVerdict,
    classify_by_rank,
    has_labelling,
    is_hodge_admissible,
    twisted_witness,
)

ENV_CATALOG = "CUBIC_K3_CATALOG"


class Status(Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


class Rationality(Enum):
    RATIONAL = "rational"
    CONJECTURALLY_IRRATIONAL = "conjecturally_irrational"
    OPEN = "open"


@dataclass(frozen=True)
class RankClaim:
    """Claimed rank of the algebraic middle cohomology, exact or a floor."""

    value: int
    lower_bound: bool = False

    def __str__(self) -> str:
        return f">={self.value}" if self.lower_bound else str(self.value)


@dataclass(frozen=True)
class FamilyRecord:
    name: str
    symplectic: bool
    hodge: Status
    twisted: Status
    motivic: Status
    rationality: Rationality
    order: int | None = None
    weights: tuple[int, int, int, int, int, int] | None = None
    eigenvalue: int | None = None
    dimension: int | None = None
    divisors: tuple[int, ...] = ()
    rank_a: RankClaim | None = None
    citations: tuple[str, ...] = ()

    @property
    def automorphism(self) -> DiagonalAutomorphism | None:
        if self.order is None or self.weights is None:
            return None
        return DiagonalAutomorphism(self.order, self.weights)


class CatalogError(ValueError):
    """Malformed catalog text; carries the line number and record name."""

    def __init__(self, message: str, line: int | None = None, record: str | None = None):
        self.line = line
        self.record = record
        where = []
        if record is not None:
            where.append(f"record {record!r}")
        if line is not None:
            where.append(f"line {line}")
        suffix = f" ({', '.join(where)})" if where else ""
        super().__init__(f"{message}{suffix}")


_REQUIRED_KEYS = ("symplectic", "hodge", "twisted", "motivic", "rationality")
_KNOWN_KEYS = _REQUIRED_KEYS + (
    "order",
    "weights",
    "eigenvalue",
    "dimension",
    "divisors",
    "rank_A",
    "cite",
)


def _parse_int(value: str, key: str, line: int, record: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise CatalogError(f"{key} must be an integer, got {value!r}", line, record) from None


def _parse_int_list(value: str, key: str, line: int, record: str) -> tuple[int, ...]:
    if not value.strip():
        return ()
    return tuple(_parse_int(part.strip(), key, line, record) for part in value.split(","))


def _build_record(
    name: str, fields: dict[str, tuple[str, int]], cites: tuple[str, ...], header_line: int
) -> FamilyRecord:
    for key in _REQUIRED_KEYS:
        if key not in fields:
            raise CatalogError(f"missing required key {key!r}", header_line, name)

    def take(key: str) -> tuple[str, int] | None:
        return fields.get(key)

    order = None
    if take("order"):
        value, line = fields["order"]
        order = _parse_int(value, "order", line, name)
        if order < 1:
            raise CatalogError("order must be positive", line, name)

    weights = None
    if take("weights"):
        value, line = fields["weights"]
        if order is None:
            raise CatalogError("weights require an order", line, name)
        parsed = _parse_int_list(value, "weights", line, name)
        if len(parsed) != 6:
            raise CatalogError(f"weights must have 6 entries, got {len(parsed)}", line, name)
        for w in parsed:
            if not 0 <= w < order:
                raise CatalogError(f"weight {w} out of range [0, {order})", line, name)
        weights = parsed

    eigenvalue = None
    if take("eigenvalue"):
        value, line = fields["eigenvalue"]
        if order is None:
            raise CatalogError("eigenvalue requires an order", line, name)
        eigenvalue = _parse_int(value, "eigenvalue", line, name)
        if not 0 <= eigenvalue < order:
            raise CatalogError(f"eigenvalue {eigenvalue} out of range [0, {order})", line, name)

    dimension = None
    if take("dimension"):
        value, line = fields["dimension"]
        dimension = _parse_int(value, "dimension", line, name)
        if dimension < 0:
            raise CatalogError("dimension must be nonnegative", line, name)

    value, line = fields["symplectic"]
    if value not in ("true", "false"):
        raise CatalogError(f"symplectic must be true or false, got {value!r}", line, name)
    symplectic = value == "true"

    statuses = {}
    for key in ("hodge", "twisted", "motivic"):
        value, line = fields[key]
        try:
            statuses[key] = Status(value)
        except ValueError:
            raise CatalogError(
                f"{key} must be yes, no or unknown, got {value!r}", line, name
            ) from None

    value, line = fields["rationality"]
    try:
        rationality = Rationality(value)
    except ValueError:
        raise CatalogError(
            f"rationality must be rational, conjecturally_irrational or open, got {value!r}",
            line,
            name,
        ) from None

    divisors: tuple[int, ...] = ()
    if take("divisors"):
        value, line = fields["divisors"]
        divisors = _parse_int_list(value, "divisors", line, name)
        for d in divisors:
            if d < 1:
                raise CatalogError(f"divisor {d} must be positive", line, name)

    rank_a = None
    if take("rank_A"):
        value, line = fields["rank_A"]
        text = value.strip()
        lower = text.startswith(">=")
        raw = _parse_int(text[2:].strip() if lower else text, "rank_A", line, name)
        if not 1 <= raw <= 23:
            raise CatalogError(f"rank_A {raw} out of range [1, 23]", line, name)
        rank_a = RankClaim(raw, lower)

    return FamilyRecord(
        name=name,
        symplectic=symplectic,
        hodge=statuses["hodge"],
        twisted=statuses["twisted"],
        motivic=statuses["motivic"],
        rationality=rationality,
        order=order,
        weights=weights,
        eigenvalue=eigenvalue,
        dimension=dimension,
        divisors=divisors,
        rank_a=rank_a,
        citations=cites,
    )


def parse_catalog(text: str) -> tuple[FamilyRecord, ...]:
    records: list[FamilyRecord] = []
    seen: set[str] = set()
    name: str | None = None
    header_line = 0
    fields: dict[str, tuple[str, int]] = {}
    cites: list[str] = []

    def flush() -> None:
        if name is None:
            return
        records.append(_build_record(name, fields, tuple(cites), header_line))

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("["):
            if not (line.startswith("[family ") and line.endswith("]")):
                raise CatalogError(f"malformed header {line!r}", lineno)
            flush()
            candidate = line[len("[family ") : -1].strip()
            if not candidate:
                raise CatalogError("empty family name", lineno)
            if candidate in seen:
                raise CatalogError(f"duplicate family name {candidate!r}", lineno)
            seen.add(candidate)
            name = candidate
            header_line = lineno
            fields = {}
            cites = []
            continue
        if name is None:
            raise CatalogError(f"content before the first [family ...] header: {line!r}", lineno)
        key, sep, value = line.partition("=")
        if not sep:
            raise CatalogError(f"expected 'key = value', got {line!r}", lineno, name)
        key = key.strip()
        value = value.strip()
        if key not in _KNOWN_KEYS:
            raise CatalogError(f"unknown key {key!r}", lineno, name)
        if key == "cite":
            cites.append(value)
            continue
        if key in fields:
            raise CatalogError(f"duplicate key {key!r}", lineno, name)
        fields[key] = (value, lineno)
    flush()
    return tuple(records)


def default_catalog_text() -> str:
    """The catalog honoring the CUBIC_K3_CATALOG override, else the shipped one."""
    override = os.environ.get(ENV_CATALOG)
    if override:
        return Path(override).read_text(encoding="utf-8")
    return resources.files(__package__).joinpath("data/families.cat").read_text(encoding="utf-8")


def load_catalog(path: str | Path | None = None) -> tuple[FamilyRecord, ...]:
    """Parse the catalog at path, or the default catalog when path is None."""
    if path is None:
        return parse_catalog(default_catalog_text())
    return parse_catalog(Path(path).read_text(encoding="utf-8"))


def shipped_catalog() -> tuple[FamilyRecord, ...]:
    return parse_catalog(
        resources.files(__package__).joinpath("data/families.cat").read_text(encoding="utf-8")
    )


@dataclass(frozen=True)
class CheckResult:
    record: str
    check: str
    passed: bool
    detail: str


def validate_record(record: FamilyRecord) -> list[CheckResult]:
    """Recompute whatever the stored data permits and compare with the claims.

    Checks emitted, data permitting: family dimension, symplectic verdict,
    labelling validity of every listed divisor, the Hodge status against
    divisor admissibility and rank forcing, the twisted status against
    witness existence, the rank classification against the statuses, and
    the motivic status against the mechanisms that produce a motivic
    partner (a Hodge or twisted partner, an admissible divisor or witness,
    or a symplectic symmetry of order at least 3).
    """
    checks: list[CheckResult] = []
    auto = record.automorphism

    if auto is not None and record.eigenvalue is not None and record.dimension is not None:
        recomputed = family_dimension(auto, record.eigenvalue)
        checks.append(
            CheckResult(
                record.name,
                "dimension",
                recomputed == record.dimension,
                f"claimed {record.dimension}, recomputed {recomputed}",
            )
        )

    if auto is not None and record.eigenvalue is not None:
        recomputed_symplectic = is_symplectic(auto, record.eigenvalue)
        checks.append(
            CheckResult(
                record.name,
                "symplectic",
                recomputed_symplectic == record.symplectic,
                f"claimed {str(record.symplectic).lower()}, "
                f"recomputed {str(recomputed_symplectic).lower()}",
            )
        )

    labelled = {d: has_labelling(d) for d in record.divisors}
    if record.divisors:
        bad = [d for d, ok in labelled.items() if not ok]
        checks.append(
            CheckResult(
                record.name,
                "divisor_labelling",
                not bad,
                f"divisors {list(record.divisors)}; without labelling: {bad or 'none'}",
            )
        )

    star = {d: is_hodge_admissible(d) for d in record.divisors}
    witnesses = {d: twisted_witness(d) for d in record.divisors if labelled[d]}
    rank_floor = record.rank_a.value if record.rank_a is not None else None
    forces = rank_floor is not None and rank_floor >= 12
    some_star = any(star.values())
    some_witness = any(w is not None for w in witnesses.values())

    if record.hodge is not Status.UNKNOWN:
        if record.hodge is Status.YES:
            ok = some_star or forces
            reason = (
                f"admissible divisors {[d for d, s in star.items() if s]}"
                if some_star
                else f"rank {record.rank_a} forces a partner"
            )
        else:
            ok = not some_star and not forces
            reason = f"admissible divisors {[d for d, s in star.items() if s]}, rank {record.rank_a}"
        checks.append(
            CheckResult(record.name, "hodge_consistency", ok, f"hodge={record.hodge.value}; {reason}")
        )

    if record.twisted is not Status.UNKNOWN:
        witnessed = sorted(d for d, w in witnesses.items() if w is not None)
        if record.twisted is Status.YES:
            ok = some_witness
        else:
            ok = not some_witness and record.hodge is not Status.YES
        checks.append(
            CheckResult(
                record.name,
                "twisted_consistency",
                ok,
                f"twisted={record.twisted.value}; divisors with a witness: {witnessed or 'none'}",
            )
        )

    if record.rank_a is not None and not (record.rank_a.lower_bound and record.rank_a.value < 12):
        verdict = classify_by_rank(record.rank_a.value).verdict
        if verdict is RankVerdict.FORCES_HODGE_K3:
            ok = record.hodge is Status.YES
        elif verdict is RankVerdict.VERY_GENERAL:
            ok = (
                record.hodge is Status.NO
                and record.twisted is Status.NO
                and record.motivic is Status.NO
            )
        else:
            ok = True
        checks.append(
            CheckResult(
                record.name,
                "rank_rule",
                ok,
                f"rank {record.rank_a} gives {verdict.value}; statuses "
                f"{record.hodge.value}/{record.twisted.value}/{record.motivic.value}",
            )
        )

    if record.motivic is not Status.UNKNOWN:
        mechanisms = (
            record.hodge is Status.YES
            or record.twisted is Status.YES
            or some_star
            or some_witness
            or (record.symplectic and (record.order or 0) >= 3)
        )
        ok = mechanisms if record.motivic is Status.YES else not mechanisms
        checks.append(
            CheckResult(
                record.name,
                "motivic_consistency",
                ok,
                f"motivic={record.motivic.value}; mechanism present: {str(mechanisms).lower()}",
            )
        )

    return checks


def validate_catalog(records: tuple[FamilyRecord, ...]) -> list[CheckResult]:
    out: list[CheckResult] = []
    for record in records:
        out.extend(validate_record(record))
    return out


# Isolated fixed points of a natural symplectic prime-order action on the
# Hilbert square of a K3 surface, per prime order.
_HILBERT_SQUARE_FIXED_POINTS = {3: 27, 5: 14, 7: 9}


def symplectic_fixed_point_count(p: int) -> int:
    """Fixed points on the Hilbert square induced by a prime-order symplectic
    action on the underlying K3 surface; defined for p in {3, 5, 7}."""
    try:
        return _HILBERT_SQUARE_FIXED_POINTS[p]
    except KeyError:
        raise ValueError(f"no natural symplectic action of prime order {p!r} applies here") from None


@dataclass(frozen=True)
class PolarizationClass:
    """Invariant polarization 2f - (2n+1)delta on the Hilbert square of a
    degree-2(n^2+n+1) K3 surface, in the standard (f, delta) basis."""

    f_coeff: int
    delta_coeff: int


def polarization_class(n: int) -> PolarizationClass:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    return PolarizationClass(f_coeff=2, delta_coeff=-(2 * n + 1))
