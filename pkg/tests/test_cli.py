"""Tests for the command line interface."""

import json

import pytest

from cisym.cli import main
from cisym.configio import dump_config
from cisym.localization import (
    AmbientData,
    Configuration,
    PointComponent,
    SurfaceComponent,
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_usage_error(capsys, *argv):
    with pytest.raises(SystemExit) as excinfo:
        main(list(argv))
    captured = capsys.readouterr()
    return excinfo.value.code, captured.out, captured.err


def quadric_config(rho=1):
    surface = SurfaceComponent((1, 1), 0, -2, 0, 0, 2)
    plus = PointComponent(1, (1, 1, 1), 1)
    minus = PointComponent(-1, (1, 1, 1), -1)
    return Configuration(AmbientData(2, rho, 4), "surface_plus_two_points",
                         (surface, plus, minus))


def test_invariants_text(capsys):
    code, out, _ = run(capsys, "invariants", "3", "5")
    assert code == 0
    assert "X_3(5)" in out
    assert "euler characteristic: -200" in out
    assert "b3: 204" in out


def test_invariants_json_exact_values(capsys):
    code, out, _ = run(capsys, "invariants", "2", "6", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["signature"] == -64
    assert obj["a_hat"] == "8"
    assert obj["euler"] == 108
    assert obj["spin"] is True
    assert obj["b3"] is None


def test_invariants_json_fractional_a_hat(capsys):
    code, out, _ = run(capsys, "invariants", "2", "3", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["a_hat"] == "5/8"
    assert obj["signature"] == -5


def test_json_output_is_canonically_sorted(capsys):
    _, out, _ = run(capsys, "invariants", "2", "4", "--json")
    assert out == json.dumps(json.loads(out), indent=2, sort_keys=True) + "\n"


def test_invariants_usage_errors(capsys):
    code, _, err = run_usage_error(capsys, "invariants", "7", "2")
    assert code == 64
    assert "between 1 and 6" in err
    code, _, _ = run_usage_error(capsys, "invariants", "3", "0")
    assert code == 64
    code, _, _ = run_usage_error(capsys, "invariants", "3")
    assert code == 64


def test_classify_json_variants(capsys):
    code, out, _ = run(capsys, "classify", "3", "4", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["admits"] is False
    assert [h["name"] for h in obj["hypotheses"]] == [
        "homology_shape", "rho_nonpositive", "top_power_nonzero",
        "euler_below_four",
    ]
    code, out, _ = run(capsys, "classify", "2", "2", "--json")
    assert json.loads(out)["admits"] is True
    code, out, _ = run(capsys, "classify", "5", "2", "--json")
    assert json.loads(out)["admits"] is None


def test_classify_text_mentions_citation(capsys):
    code, out, _ = run(capsys, "classify", "2", "3")
    assert code == 0
    assert "admits a smooth circle action" in out
    assert "citation:" in out


def test_table_stable_and_complete(capsys):
    _, first, _ = run(capsys, "table")
    _, second, _ = run(capsys, "table")
    assert first == second
    for label in ("X_1(2, 2)", "X_2(3)", "X_3(2)"):
        assert label in first
    code, out, _ = run(capsys, "table", "--json")
    obj = json.loads(out)
    assert len(obj["entries"]) == 10
    quintic_like = [e for e in obj["entries"] if e["n"] == 3]
    assert [e["degrees"] for e in quintic_like] == [[1], [2]]


def test_verify_consistent_configuration(tmp_path, capsys):
    path = tmp_path / "good.json"
    path.write_text(dump_config(quadric_config()))
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 0
    assert "consistent" in out.splitlines()[-1]


def test_verify_inconsistent_configuration(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(dump_config(quadric_config(rho=-1)))
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 2
    assert "FAIL p1x-localization" in out
    assert "point-pontrjagin-positivity" in out


def test_verify_json_report(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(dump_config(quadric_config(rho=-1)))
    code, out, _ = run(capsys, "verify", str(path), "--json")
    assert code == 2
    obj = json.loads(out)
    assert obj["consistent"] is False
    failing = {c["name"]: c for c in obj["checks"] if not c["passed"]}
    assert failing["point-pontrjagin-positivity"]["residual"] == "-4"
    assert obj["config"]["ambient"]["rho"] == -1


def test_verify_schema_error_exit_65(tmp_path, capsys):
    path = tmp_path / "broken.json"
    text = dump_config(quadric_config()).replace('"rho": 1',
                                                 '"rho": 1, "mystery": 2')
    path.write_text(text)
    code, _, err = run(capsys, "verify", str(path))
    assert code == 65
    assert "ambient.mystery" in err


def test_verify_missing_file_exit_64(capsys):
    code, _, err = run(capsys, "verify", "/nonexistent/nowhere.json")
    assert code == 64
    assert "cannot read" in err


def test_search_cli_semifree(capsys):
    code, out, _ = run(capsys, "search", "two_surfaces", "--semifree",
                       "--rho-min", "-10", "--rho-max", "10", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["count"] == 14
    assert len(obj["hits"]) == 14
    assert {hit["ambient"]["rho"] for hit in obj["hits"]} == {1, 4}


def test_search_cli_empty_sweep(capsys):
    code, out, _ = run(capsys, "search", "cp2like_plus_point", "--json")
    assert code == 0
    assert json.loads(out)["count"] == 0


def test_search_cli_budget_exit_66(capsys):
    code, _, err = run(capsys, "search", "two_surfaces", "--budget", "10")
    assert code == 66
    assert "budget" in err


def test_search_cli_bad_template_exit_64(capsys):
    code, _, _ = run_usage_error(capsys, "search", "dodecahedron")
    assert code == 64


def test_search_cli_workers(capsys):
    code, single, _ = run(capsys, "search", "two_surfaces", "--semifree",
                          "--rho-min", "-10", "--rho-max", "10", "--json")
    code2, multi, _ = run(capsys, "search", "two_surfaces", "--semifree",
                          "--rho-min", "-10", "--rho-max", "10", "--json",
                          "--workers", "3")
    assert code == code2 == 0
    assert single == multi
