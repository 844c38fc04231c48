"""Command-line front end.

Every command prints a human-readable rendering by default and a canonical
JSON envelope with --json: keys sorted, integers exact, rational
coefficients rendered as p/q inside expression strings, no floats, no
timestamps.  Identical invocations produce identical bytes.

Exit codes: 0 success, 2 usage or malformed input, 3 unknown family,
4 validation failures present.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .actions import (
    DiagonalAutomorphism,
    IntersectionKind,
    eigen_class_sizes,
    family_dimension_breakdown,
    fixed_locus_ambient,
    fixed_locus_on_hypersurface,
    is_eigenform,
    is_symplectic,
)
from .catalog import CatalogError, load_catalog, validate_record
from .discriminants import discriminant_report, enumerate_hodge_admissible
from .forms import FormParseError, parse_cubic_form
from .lattices import GramMatrix


class CliFailure(Exception):
    def __init__(self, code: int, message: str):
        self.code = code
        self.message = message
        super().__init__(message)


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _any_int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubic-k3",
        description="Exact arithmetic on special cubic fourfolds: K3 association "
        "criteria, diagonal automorphisms, fixed loci, and the family catalog.",
    )
    parser.add_argument("--json", action="store_true", help="emit a canonical JSON envelope")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-d", help="full report on one discriminant")
    p.add_argument("d", type=_positive_int)

    p = sub.add_parser("admissible", help="discriminants with a Hodge-theoretic partner")
    p.add_argument("--max", type=_positive_int, required=True, dest="max_d")

    p = sub.add_parser("analyze-auto", help="eigen structure of a diagonal automorphism")
    p.add_argument("--order", type=_positive_int, required=True)
    p.add_argument("--weights", required=True, help="six comma-separated residues")
    p.add_argument("--eigenvalue", type=_any_int, required=True)

    p = sub.add_parser("fixed-locus", help="fixed locus of an action on an invariant cubic")
    p.add_argument("--form", required=True, help="a form expression, or a path to a file holding one")
    p.add_argument("--order", type=_positive_int, required=True)
    p.add_argument("--weights", required=True, help="six comma-separated residues")

    p = sub.add_parser("gram", help="determinant and definiteness of a Gram matrix")
    p.add_argument("--entries", required=True, help="row-major comma-separated integers")
    p.add_argument("--size", type=_positive_int, required=True)

    p = sub.add_parser("family", help="one catalog record with fresh recomputations")
    p.add_argument("name")

    p = sub.add_parser("validate-catalog", help="recompute every catalog claim")
    p.add_argument("--file", default=None, help="catalog path (else CUBIC_K3_CATALOG or shipped)")

    return parser


def _parse_weights(text: str, order: int) -> tuple[int, ...]:
    parts = [p.strip() for p in text.split(",")]
    try:
        weights = tuple(int(p) for p in parts)
    except ValueError:
        raise CliFailure(2, f"weights must be integers, got {text!r}") from None
    if len(weights) != 6:
        raise CliFailure(2, f"weights must have 6 entries, got {len(weights)}")
    for w in weights:
        if not 0 <= w < order:
            raise CliFailure(2, f"weight {w} out of range [0, {order})")
    return weights


def _bool_word(value: bool) -> str:
    return "yes" if value else "no"


def cmd_check_d(args: argparse.Namespace):
    report = discriminant_report(args.d)
    witness = report.twisted_witness
    result = {
        "d": report.d,
        "has_labelling": report.has_labelling,
        "hodge_associated": report.hodge_associated,
        "twisted_witness": None if witness is None else {"f": witness.f, "g": witness.g, "n": witness.n},
        "fano_hilbert_n": report.fano_hilbert_n,
        "genus": report.genus,
    }
    human = [
        f"d: {report.d}",
        f"has_labelling: {_bool_word(report.has_labelling)}",
        f"hodge_associated: {_bool_word(report.hodge_associated)}",
        "twisted_witness: none"
        if witness is None
        else f"twisted_witness: f={witness.f} g={witness.g} n={witness.n}",
        f"fano_hilbert_n: {'none' if report.fano_hilbert_n is None else report.fano_hilbert_n}",
        f"genus: {'none' if report.genus is None else report.genus}",
    ]
    return result, None, human, 0


def cmd_admissible(args: argparse.Namespace):
    values = enumerate_hodge_admissible(args.max_d)
    return {"discriminants": values}, None, [str(d) for d in values], 0


def cmd_analyze_auto(args: argparse.Namespace):
    weights = _parse_weights(args.weights, args.order)
    if not 0 <= args.eigenvalue < args.order:
        raise CliFailure(2, f"eigenvalue {args.eigenvalue} out of range [0, {args.order})")
    auto = DiagonalAutomorphism(args.order, weights)
    breakdown = family_dimension_breakdown(auto, args.eigenvalue)
    symplectic = is_symplectic(auto, args.eigenvalue)
    sizes = eigen_class_sizes(auto)
    components = fixed_locus_ambient(auto)
    warnings = []
    if auto.is_projectively_trivial:
        warnings.append("the action on projective space is trivial; every cubic is invariant")
    result = {
        "order": auto.order,
        "weights": list(auto.weights),
        "eigenvalue": args.eigenvalue,
        "eigen_class_sizes": {str(k): n for k, n in sizes.items()},
        "family_dimension": breakdown.dimension,
        "degenerate": breakdown.degenerate,
        "symplectic": symplectic,
        "fixed_locus": [
            {"weight": c.eigen_weight, "ambient_dim": c.ambient_dim, "variables": list(c.variables)}
            for c in components
        ],
        "warnings": warnings,
    }
    human = [
        f"order: {auto.order}",
        f"weights: {','.join(str(w) for w in auto.weights)}",
        f"eigenvalue: {args.eigenvalue}",
        "eigen_class_sizes: " + " ".join(f"{k}:{n}" for k, n in sizes.items()),
        f"family_dimension: {breakdown.dimension}"
        + (" (degenerate: empty eigenclass)" if breakdown.degenerate else ""),
        f"symplectic: {_bool_word(symplectic)}",
        "fixed_locus:",
    ]
    for c in components:
        names = " ".join(f"x{i}" for i in c.variables)
        human.append(f"  weight {c.eigen_weight}: P{c.ambient_dim} on {names}")
    for w in warnings:
        human.append(f"warning: {w}")
    return result, None, human, 0


_KIND_HUMAN = {
    IntersectionKind.CONTAINED_IN_X: "contained in the cubic",
    IntersectionKind.HYPERSURFACE: "cubic hypersurface",
    IntersectionKind.TRIPLE_POINTS: "3 points (with multiplicity)",
    IntersectionKind.POINT_ON_X: "point on the cubic",
    IntersectionKind.POINT_OFF_X: "point off the cubic",
    IntersectionKind.EMPTY: "empty",
}


def cmd_fixed_locus(args: argparse.Namespace):
    text = args.form
    if os.path.exists(text):
        text = Path(text).read_text(encoding="utf-8").strip()
    weights = _parse_weights(args.weights, args.order)
    auto = DiagonalAutomorphism(args.order, weights)
    try:
        form = parse_cubic_form(text)
    except FormParseError as e:
        raise CliFailure(2, f"invalid form: {e}") from None
    try:
        eigenvalue = is_eigenform(form, auto)
        components = fixed_locus_on_hypersurface(form, auto)
    except ValueError as e:
        raise CliFailure(2, str(e)) from None
    rows = []
    human = [f"eigenvalue: {eigenvalue}", "components:"]
    for c in components:
        on_x = c.on_x
        assert on_x is not None
        restriction = None if on_x.restriction is None else on_x.restriction.to_expression()
        rows.append(
            {
                "weight": c.eigen_weight,
                "ambient_dim": c.ambient_dim,
                "variables": list(c.variables),
                "kind": on_x.kind.value,
                "restriction": restriction,
                "point_count": on_x.point_count,
            }
        )
        names = " ".join(f"x{i}" for i in c.variables)
        line = f"  weight {c.eigen_weight}: P{c.ambient_dim} on {names} -> {_KIND_HUMAN[on_x.kind]}"
        if restriction is not None:
            line += f": {restriction}"
        human.append(line)
    return {"eigenvalue": eigenvalue, "components": rows}, None, human, 0


def cmd_gram(args: argparse.Namespace):
    parts = [p.strip() for p in args.entries.split(",")]
    try:
        flat = [int(p) for p in parts]
    except ValueError:
        raise CliFailure(2, f"entries must be integers, got {args.entries!r}") from None
    k = args.size
    if len(flat) != k * k:
        raise CliFailure(2, f"expected {k * k} entries for size {k}, got {len(flat)}")
    try:
        gram = GramMatrix.of([flat[i * k : (i + 1) * k] for i in range(k)])
    except ValueError as e:
        raise CliFailure(2, str(e)) from None
    determinant = gram.determinant()
    positive = gram.is_positive_definite()
    result = {
        "size": k,
        "entries": [list(row) for row in gram.entries],
        "determinant": determinant,
        "positive_definite": positive,
    }
    human = [
        f"size: {k}",
        f"determinant: {determinant}",
        f"positive_definite: {_bool_word(positive)}",
    ]
    return result, None, human, 0


def _record_payload(record):
    return {
        "name": record.name,
        "order": record.order,
        "weights": None if record.weights is None else list(record.weights),
        "eigenvalue": record.eigenvalue,
        "dimension": record.dimension,
        "symplectic": record.symplectic,
        "divisors": list(record.divisors),
        "rank_A": None if record.rank_a is None else str(record.rank_a),
        "hodge": record.hodge.value,
        "twisted": record.twisted.value,
        "motivic": record.motivic.value,
        "rationality": record.rationality.value,
        "citations": list(record.citations),
    }


def _check_payload(check):
    return {
        "record": check.record,
        "check": check.check,
        "passed": check.passed,
        "detail": check.detail,
    }


def _record_human(record) -> list[str]:
    lines = [f"family: {record.name}"]
    if record.order is not None:
        lines.append(f"order: {record.order}")
    if record.weights is not None:
        lines.append("weights: " + ",".join(str(w) for w in record.weights))
    if record.eigenvalue is not None:
        lines.append(f"eigenvalue: {record.eigenvalue}")
    if record.dimension is not None:
        lines.append(f"dimension: {record.dimension}")
    lines.append(f"symplectic: {_bool_word(record.symplectic)}")
    lines.append(
        "divisors: " + (",".join(str(d) for d in record.divisors) if record.divisors else "(none)")
    )
    if record.rank_a is not None:
        lines.append(f"rank_A: {record.rank_a}")
    lines.append(f"hodge: {record.hodge.value}")
    lines.append(f"twisted: {record.twisted.value}")
    lines.append(f"motivic: {record.motivic.value}")
    lines.append(f"rationality: {record.rationality.value}")
    for cite in record.citations:
        lines.append(f"cite: {cite}")
    return lines


def _load_records(path: str | None):
    try:
        return load_catalog(path)
    except FileNotFoundError as e:
        raise CliFailure(2, f"catalog file not found: {e.filename}") from None
    except CatalogError as e:
        raise CliFailure(2, f"malformed catalog: {e}") from None


def cmd_family(args: argparse.Namespace):
    records = _load_records(None)
    by_name = {r.name: r for r in records}
    record = by_name.get(args.name)
    if record is None:
        names = ", ".join(r.name for r in records)
        raise CliFailure(3, f"unknown family {args.name!r}; valid names: {names}")
    checks = validate_record(record)
    human = _record_human(record)
    human.append("checks:")
    for c in checks:
        human.append(f"  {'PASS' if c.passed else 'FAIL'} {c.check}: {c.detail}")
    code = 0 if all(c.passed for c in checks) else 4
    return _record_payload(record), [_check_payload(c) for c in checks], human, code


def cmd_validate_catalog(args: argparse.Namespace):
    records = _load_records(args.file)
    checks = []
    for record in records:
        checks.extend(validate_record(record))
    failures = sum(1 for c in checks if not c.passed)
    result = {"records": len(records), "checks_run": len(checks), "failures": failures}
    human = []
    for c in checks:
        human.append(f"{'PASS' if c.passed else 'FAIL'} {c.record} {c.check}: {c.detail}")
    human.append(f"records: {len(records)}")
    human.append(f"checks_run: {len(checks)}")
    human.append(f"failures: {failures}")
    code = 0 if failures == 0 else 4
    return result, [_check_payload(c) for c in checks], human, code


_HANDLERS = {
    "check-d": cmd_check_d,
    "admissible": cmd_admissible,
    "analyze-auto": cmd_analyze_auto,
    "fixed-locus": cmd_fixed_locus,
    "gram": cmd_gram,
    "family": cmd_family,
    "validate-catalog": cmd_validate_catalog,
}


def _inputs_echo(args: argparse.Namespace) -> dict:
    skip = {"command", "json"}
    echo = {}
    for key, value in sorted(vars(args).items()):
        if key in skip:
            continue
        name = {"max_d": "max"}.get(key, key)
        echo[name] = value
    return echo


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    inputs = _inputs_echo(args)
    try:
        result, checks, human, code = _HANDLERS[args.command](args)
    except CliFailure as failure:
        print(failure.message, file=sys.stderr)
        return failure.code
    if args.json:
        envelope = {
            "command": args.command,
            "inputs": inputs,
            "result": result,
            "version": __version__,
        }
        if checks is not None:
            envelope["checks"] = checks
        print(json.dumps(envelope, sort_keys=True, indent=2))
    else:
        for line in human:
            print(line)
    return code


def run() -> None:
    sys.exit(main())
