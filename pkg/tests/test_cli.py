"""End-to-end command-line behavior, plain and JSON renderings."""

import json

import pytest

from cubic_k3 import ENV_CATALOG, __version__
from cubic_k3.cli import main

TINY_CATALOG = """[family tiny]
symplectic = false
hodge = no
twisted = no
motivic = no
rationality = open
"""

WRONG_DIMENSION_CATALOG = """[family Wrong]
order = 3
weights = 0,0,0,1,1,2
eigenvalue = 0
dimension = 8
symplectic = false
hodge = no
twisted = no
motivic = no
rationality = open
"""


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_d_plain(capsys):
    code, out, err = run(capsys, "check-d", "42")
    assert code == 0
    assert err == ""
    assert out.splitlines() == [
        "d: 42",
        "has_labelling: yes",
        "hodge_associated: yes",
        "twisted_witness: f=1 g=42 n=4",
        "fano_hilbert_n: 4",
        "genus: 22",
    ]


def test_check_d_witness_without_hodge(capsys):
    code, out, _ = run(capsys, "check-d", "8")
    assert code == 0
    assert out.splitlines() == [
        "d: 8",
        "has_labelling: yes",
        "hodge_associated: no",
        "twisted_witness: f=2 g=2 n=0",
        "fano_hilbert_n: none",
        "genus: none",
    ]


def test_check_d_unlabelled(capsys):
    code, out, _ = run(capsys, "check-d", "7")
    assert code == 0
    assert out.splitlines() == [
        "d: 7",
        "has_labelling: no",
        "hodge_associated: no",
        "twisted_witness: none",
        "fano_hilbert_n: none",
        "genus: none",
    ]


def test_check_d_json(capsys):
    code, out, _ = run(capsys, "--json", "check-d", "42")
    assert code == 0
    envelope = json.loads(out)
    assert envelope["command"] == "check-d"
    assert envelope["inputs"] == {"d": 42}
    assert envelope["version"] == __version__
    assert envelope["result"] == {
        "d": 42,
        "has_labelling": True,
        "hodge_associated": True,
        "twisted_witness": {"f": 1, "g": 42, "n": 4},
        "fano_hilbert_n": 4,
        "genus": 22,
    }


def test_usage_errors_exit_two():
    with pytest.raises(SystemExit) as e:
        main(["check-d", "banana"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["check-d", "0"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main([])
    assert e.value.code == 2


def test_admissible_plain(capsys):
    code, out, _ = run(capsys, "admissible", "--max", "100")
    assert code == 0
    assert out.splitlines() == ["14", "26", "38", "42", "62", "74", "78", "86", "98"]


def test_admissible_json(capsys):
    code, out, _ = run(capsys, "--json", "admissible", "--max", "50")
    assert code == 0
    envelope = json.loads(out)
    assert envelope["inputs"] == {"max": 50}
    assert envelope["result"] == {"discriminants": [14, 26, 38, 42]}


def test_analyze_auto_json(capsys):
    code, out, _ = run(
        capsys,
        "--json",
        "analyze-auto",
        "--order",
        "3",
        "--weights",
        "0,0,0,1,1,2",
        "--eigenvalue",
        "0",
    )
    assert code == 0
    result = json.loads(out)["result"]
    assert result["eigen_class_sizes"] == {"0": 21, "1": 18, "2": 17}
    assert result["family_dimension"] == 7
    assert result["degenerate"] is False
    assert result["symplectic"] is False
    assert result["fixed_locus"] == [
        {"weight": 0, "ambient_dim": 2, "variables": [0, 1, 2]},
        {"weight": 1, "ambient_dim": 1, "variables": [3, 4]},
        {"weight": 2, "ambient_dim": 0, "variables": [5]},
    ]
    assert result["warnings"] == []


def test_analyze_auto_plain(capsys):
    code, out, _ = run(
        capsys,
        "analyze-auto",
        "--order",
        "2",
        "--weights",
        "0,0,0,0,1,1",
        "--eigenvalue",
        "0",
    )
    assert code == 0
    lines = out.splitlines()
    assert "family_dimension: 12" in lines
    assert "symplectic: yes" in lines
    assert "  weight 0: P3 on x0 x1 x2 x3" in lines
    assert "  weight 1: P1 on x4 x5" in lines


def test_analyze_auto_trivial_action_warns(capsys):
    code, out, _ = run(
        capsys,
        "analyze-auto",
        "--order",
        "1",
        "--weights",
        "0,0,0,0,0,0",
        "--eigenvalue",
        "0",
    )
    assert code == 0
    assert "family_dimension: 20" in out
    assert "warning:" in out


def test_analyze_auto_input_errors(capsys):
    code, _, err = run(capsys, "analyze-auto", "--order", "3", "--weights", "0,1", "--eigenvalue", "0")
    assert code == 2
    assert "6 entries" in err

    code, _, err = run(
        capsys, "analyze-auto", "--order", "3", "--weights", "0,0,0,0,0,3", "--eigenvalue", "0"
    )
    assert code == 2
    assert "out of range" in err

    code, _, err = run(
        capsys, "analyze-auto", "--order", "3", "--weights", "0,0,0,0,0,1", "--eigenvalue", "3"
    )
    assert code == 2
    assert "eigenvalue" in err


def test_fixed_locus_inline(capsys):
    code, out, _ = run(
        capsys,
        "--json",
        "fixed-locus",
        "--form",
        "x0^3 + x1^3 + x2^3 + x3^3 + x4^3 + x5^3",
        "--order",
        "3",
        "--weights",
        "0,0,1,1,2,2",
    )
    assert code == 0
    result = json.loads(out)["result"]
    assert result["eigenvalue"] == 0
    assert [c["kind"] for c in result["components"]] == ["points", "points", "points"]
    assert [c["point_count"] for c in result["components"]] == [3, 3, 3]
    assert result["components"][0]["restriction"] == "x0^3 + x1^3"


def test_fixed_locus_plain(capsys):
    code, out, _ = run(
        capsys,
        "fixed-locus",
        "--form",
        "x0^3 + x1^3 + x2^3 + x3^3 + x4^3 + x5^3",
        "--order",
        "3",
        "--weights",
        "0,0,0,0,1,2",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "eigenvalue: 0"
    assert lines[1] == "components:"
    assert lines[2].endswith("cubic hypersurface: x0^3 + x1^3 + x2^3 + x3^3")
    assert "point off the cubic" in lines[3]
    assert "point off the cubic" in lines[4]


def test_fixed_locus_from_file(tmp_path, capsys):
    path = tmp_path / "form.txt"
    path.write_text("x0^3 + x1^3 + x2^3 + x3^3 + x4^3 + x5^3\n", encoding="utf-8")
    code, out, _ = run(
        capsys, "fixed-locus", "--form", str(path), "--order", "3", "--weights", "0,0,1,1,2,2"
    )
    assert code == 0
    assert "3 points (with multiplicity)" in out


def test_fixed_locus_parse_error(capsys):
    code, _, err = run(
        capsys, "fixed-locus", "--form", "x0^2", "--order", "2", "--weights", "0,0,0,0,0,1"
    )
    assert code == 2
    assert err.startswith("invalid form:")
    assert "position 0" in err


def test_fixed_locus_rejects_mixed_form(capsys):
    code, _, err = run(
        capsys,
        "fixed-locus",
        "--form",
        "x0^3 + x5^3",
        "--order",
        "2",
        "--weights",
        "0,0,0,0,0,1",
    )
    assert code == 2
    assert err != ""


def test_gram(capsys):
    code, out, _ = run(capsys, "gram", "--entries", "3,3,3,7", "--size", "2")
    assert code == 0
    assert out.splitlines() == ["size: 2", "determinant: 12", "positive_definite: yes"]

    code, out, _ = run(capsys, "--json", "gram", "--entries", "3,3,3,7", "--size", "2")
    result = json.loads(out)["result"]
    assert result == {
        "size": 2,
        "entries": [[3, 3], [3, 7]],
        "determinant": 12,
        "positive_definite": True,
    }


def test_gram_errors(capsys):
    code, _, err = run(capsys, "gram", "--entries", "3,3,3", "--size", "2")
    assert code == 2
    assert "expected 4 entries" in err

    code, _, err = run(capsys, "gram", "--entries", "3,1,2,7", "--size", "2")
    assert code == 2

    code, _, err = run(capsys, "gram", "--entries", "3,a,a,7", "--size", "2")
    assert code == 2


def test_family_report(capsys):
    code, out, _ = run(capsys, "family", "V3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "family: V3"
    assert "dimension: 7" in lines
    check_lines = [l for l in lines if l.startswith("  PASS") or l.startswith("  FAIL")]
    assert len(check_lines) == 7
    assert all(l.startswith("  PASS") for l in check_lines)


def test_family_json_carries_checks(capsys):
    code, out, _ = run(capsys, "--json", "family", "F2")
    assert code == 0
    envelope = json.loads(out)
    assert envelope["result"]["name"] == "F2"
    assert envelope["result"]["dimension"] is None
    assert envelope["result"]["rank_A"] == "9"
    checks = envelope["checks"]
    assert len(checks) == 6
    assert all(c["passed"] for c in checks)


def test_family_unknown(capsys):
    code, _, err = run(capsys, "family", "nonesuch")
    assert code == 3
    assert "unknown family" in err
    assert "F1" in err and "Clebsch" in err


def test_validate_catalog_shipped(capsys, monkeypatch):
    monkeypatch.delenv(ENV_CATALOG, raising=False)
    code, out, _ = run(capsys, "validate-catalog")
    assert code == 0
    lines = out.splitlines()
    assert lines[-3:] == ["records: 12", "checks_run: 72", "failures: 0"]
    assert sum(1 for l in lines if l.startswith("PASS ")) == 72

    code, out, _ = run(capsys, "--json", "validate-catalog")
    envelope = json.loads(out)
    assert envelope["result"] == {"records": 12, "checks_run": 72, "failures": 0}
    assert len(envelope["checks"]) == 72


def test_validate_catalog_reports_failures(tmp_path, capsys):
    path = tmp_path / "wrong.cat"
    path.write_text(WRONG_DIMENSION_CATALOG, encoding="utf-8")
    code, out, _ = run(capsys, "validate-catalog", "--file", str(path))
    assert code == 4
    assert "FAIL Wrong dimension:" in out
    assert "failures: 1" in out


def test_validate_catalog_missing_file(capsys):
    code, _, err = run(capsys, "validate-catalog", "--file", "/no/such/catalog.cat")
    assert code == 2
    assert "not found" in err


def test_validate_catalog_malformed_file(tmp_path, capsys):
    path = tmp_path / "broken.cat"
    path.write_text("[family X]\nsymplectic = false\n", encoding="utf-8")
    code, _, err = run(capsys, "validate-catalog", "--file", str(path))
    assert code == 2
    assert err.startswith("malformed catalog:")


def test_env_catalog_reaches_family_command(tmp_path, monkeypatch, capsys):
    path = tmp_path / "tiny.cat"
    path.write_text(TINY_CATALOG, encoding="utf-8")
    monkeypatch.setenv(ENV_CATALOG, str(path))

    code, out, _ = run(capsys, "family", "tiny")
    assert code == 0
    assert out.splitlines()[0] == "family: tiny"

    code, _, err = run(capsys, "family", "V1")
    assert code == 3
    assert "valid names: tiny" in err


def test_output_is_deterministic(capsys, monkeypatch):
    monkeypatch.delenv(ENV_CATALOG, raising=False)
    for argv in (
        ["--json", "check-d", "42"],
        ["--json", "validate-catalog"],
        ["admissible", "--max", "60"],
        ["--json", "analyze-auto", "--order", "3", "--weights", "0,0,1,1,2,2", "--eigenvalue", "0"],
    ):
        first = run(capsys, *argv)
        second = run(capsys, *argv)
        assert first == second
