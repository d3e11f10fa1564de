"""Command-line runs against graph files written to a temporary directory."""

import json
from pathlib import Path

import jsonschema
import pytest
import typer

from leavitt_spectrum.catalog import GRAPH_TEXTS
from leavitt_spectrum.cli import ABORTS, USAGE_ERRORS, run
from leavitt_spectrum.report import SpectrumReport, report_schema


@pytest.fixture
def graph_file(tmp_path: Path):
    def write(name: str) -> str:
        path = tmp_path / f"{name.lower()}.g"
        path.write_text(GRAPH_TEXTS[name], encoding="utf-8")
        return str(path)

    return write


def run_json(capsys: pytest.CaptureFixture[str], argv: list[str]) -> tuple[int, dict]:
    code = run([*argv, "--format", "json"])
    return code, json.loads(capsys.readouterr().out)


def test_check_primitive_toeplitz_succeeds_silently(graph_file, capsys) -> None:
    assert run(["check", "primitive", graph_file("TOEPLITZ")]) == 0
    assert capsys.readouterr().out == ""


def test_check_primitive_loop_fails_with_witness(graph_file, capsys) -> None:
    assert run(["check", "primitive", graph_file("LOOP")]) == 1
    assert "exitless cycle (e)" in capsys.readouterr().out


def test_check_prime_json_reports_the_unrelated_pair(graph_file, capsys) -> None:
    code, data = run_json(capsys, ["check", "prime", graph_file("TWO_LOOPS")])
    assert code == 1
    assert data["holds"] is False
    assert data["witness"] == {"type": "unrelated_pair", "vertices": ["v", "w"]}


def test_check_simple_json_on_success(graph_file, capsys) -> None:
    code, data = run_json(capsys, ["check", "simple", graph_file("ROSE2")])
    assert code == 0
    assert data == {"property": "simple", "holds": True, "witness": None, "reason": None}


def test_spectrum_of_loop_over_gf2(graph_file, capsys) -> None:
    code, data = run_json(
        capsys, ["spectrum", graph_file("LOOP"), "--field", "gf:2", "--max-degree", "3"]
    )
    assert code == 0
    jsonschema.validate(data, SpectrumReport.model_json_schema())
    kinds = [entry["type"] for entry in data["spectrum"]]
    assert kinds == ["graded"] + ["nongraded"] * 4
    assert [entry.get("polynomial") for entry in data["spectrum"][1:]] == [
        "x+1",
        "x^2+x+1",
        "x^3+x+1",
        "x^3+x^2+1",
    ]


def test_spectrum_over_q_is_symbolic(graph_file, capsys) -> None:
    code, data = run_json(capsys, ["spectrum", graph_file("LOOP"), "--field", "q"])
    assert code == 0
    assert len(data["spectrum"]) == 1
    assert "Spec(Q[x,x^-1])* (infinite)" in data["nongraded_symbolic"]


def test_spectrum_over_q_with_polynomials(graph_file, capsys) -> None:
    code, data = run_json(
        capsys,
        ["spectrum", graph_file("LOOP"), "--field", "q", "--poly", "x-1", "--poly", "x^2+1"],
    )
    assert code == 0
    assert [entry.get("polynomial") for entry in data["spectrum"]] == [None, "x-1", "x^2+1"]
    assert data["nongraded_symbolic"] is None


@pytest.mark.parametrize(
    "extra, code",
    [
        (["--field", "gf:2", "--poly", "x^2+1"], 3),
        (["--field", "q", "--poly", "x^4+1"], 3),
        (["--field", "q", "--poly", "x^^2"], 2),
        (["--field", "gf:4"], 2),
        (["--max-degree", "0"], 2),
    ],
    ids=["reducible", "undecided", "malformed", "composite-field", "degree"],
)
def test_spectrum_errors(graph_file, capsys, extra: list[str], code: int) -> None:
    assert run(["spectrum", graph_file("LOOP"), *extra]) == code
    assert capsys.readouterr().out == ""


def test_assert_irreducible_admits_high_degree_over_q(graph_file, capsys) -> None:
    code, data = run_json(
        capsys,
        [
            "spectrum",
            graph_file("LOOP"),
            "--field",
            "q",
            "--poly",
            "x^4+1",
            "--assert-irreducible",
        ],
    )
    assert code == 0
    assert data["spectrum"][-1]["polynomial"] == "x^4+1"


def test_analyze_json_matches_the_schema(graph_file, capsys) -> None:
    code, data = run_json(capsys, ["analyze", graph_file("TOEPLITZ"), "--max-degree", "1"])
    assert code == 0
    jsonschema.validate(data, report_schema())
    assert (data["prime"], data["primitive"], data["simple"]) == (True, True, False)
    assert data["recognized"]["label"] == "Toeplitz algebra"


def test_analyze_text(graph_file, capsys) -> None:
    assert run(["analyze", graph_file("TOEPLITZ")]) == 0
    out = capsys.readouterr().out
    assert "Toeplitz algebra" in out
    assert "simple: no" in out


def test_tails_text_and_json(graph_file, capsys) -> None:
    assert run(["tails", graph_file("TOEPLITZ")]) == 0
    assert "tau" in capsys.readouterr().out
    code, data = run_json(capsys, ["tails", graph_file("TOEPLITZ")])
    assert code == 0
    assert data["maximal_tails"] == [
        {"members": ["v", "w"], "kind": "gamma", "no_exit_cycle": None},
        {"members": ["v"], "kind": "tau", "no_exit_cycle": ["e"]},
    ]


def test_closure(graph_file, capsys) -> None:
    code, data = run_json(capsys, ["closure", graph_file("LINE3"), "--set", "u3"])
    assert code == 0
    assert data["closure"] == ["u1", "u2", "u3"]
    assert data["stages"] == [["u3"], ["u2", "u3"], ["u1", "u2", "u3"]]


def test_closure_text(graph_file, capsys) -> None:
    assert run(["closure", graph_file("LINE3"), "--set", "u3"]) == 0
    assert "closure: {u1, u2, u3}" in capsys.readouterr().out


def test_unknown_vertex_in_set_is_a_domain_error(graph_file, capsys) -> None:
    assert run(["closure", graph_file("LINE3"), "--set", "u3,zz"]) == 3
    assert "zz" in capsys.readouterr().err


def test_hsat(graph_file, capsys) -> None:
    code, data = run_json(capsys, ["hsat", graph_file("TOEPLITZ")])
    assert code == 0
    assert data == {"hsat": [[], ["w"], ["v", "w"]]}


def test_quotient_text(graph_file, capsys) -> None:
    assert run(["quotient", graph_file("TOEPLITZ"), "--set", "w"]) == 0
    out = capsys.readouterr().out
    assert out == "# construction: quotient\n# H: ['w']\nvertex v\nedge e v v\n"


def test_quotient_needs_hereditary_set(graph_file, capsys) -> None:
    assert run(["quotient", graph_file("TOEPLITZ"), "--set", "v"]) == 3


def test_restrict_json(graph_file, capsys) -> None:
    code, data = run_json(capsys, ["restrict", graph_file("TWO_LOOPS"), "--set", "v"])
    assert code == 0
    assert data["graph"] == {"vertices": ["v"], "edges": [{"name": "e", "source": "v", "range": "v"}]}


def test_hedge_json_reports_truncation(graph_file, capsys) -> None:
    code, data = run_json(
        capsys, ["hedge", graph_file("TOEPLITZ"), "--set", "w", "--bound", "2"]
    )
    assert code == 0
    assert data["finite"] is False
    assert data["truncated"] is True
    assert data["graph"]["vertices"] == ["w", "f", "ef"]
    assert data["name_map"]["ef"] == ["e", "f"]


def test_hedge_needs_hereditary_saturated_set(graph_file, capsys) -> None:
    assert run(["hedge", graph_file("LINE3"), "--set", "u3"]) == 3


def test_dot(graph_file, capsys) -> None:
    assert run(["dot", graph_file("TOEPLITZ")]) == 0
    assert "v -> w" in capsys.readouterr().out


def test_catalog_prints_the_graph_text(capsys) -> None:
    assert run(["catalog", "toeplitz"]) == 0
    assert capsys.readouterr().out == GRAPH_TEXTS["TOEPLITZ"]
    assert run(["catalog", "petersen"]) == 3


def test_bad_graph_file_is_a_parse_error(tmp_path: Path, capsys) -> None:
    path = tmp_path / "broken.g"
    path.write_text("edge e v v\n", encoding="utf-8")
    assert run(["tails", str(path)]) == 2
    assert "line 1" in capsys.readouterr().err


def test_missing_file_is_a_usage_error(tmp_path: Path, capsys) -> None:
    assert run(["tails", str(tmp_path / "absent.g")]) == 2


@pytest.mark.parametrize(
    "argv",
    [["frobnicate"], ["check"], ["check", "noetherian", "x.g"], ["--log-level", "LOUD", "hsat", "x.g"]],
    ids=["unknown-command", "missing-args", "bad-property", "bad-log-level"],
)
def test_usage_errors(argv: list[str], capsys) -> None:
    assert run(argv) == 2


def test_log_level_option(graph_file, capsys) -> None:
    assert run(["--log-level", "DEBUG", "hsat", graph_file("LOOP")]) == 0
    assert "{v}" in capsys.readouterr().out


def test_usage_errors_cover_the_classes_typer_raises() -> None:
    assert issubclass(typer.BadParameter, USAGE_ERRORS)
    assert issubclass(typer.Abort, ABORTS)


@pytest.mark.parametrize("bound", ["0", "-1"])
def test_hedge_rejects_nonpositive_bound(graph_file, capsys, bound: str) -> None:
    assert run(["hedge", graph_file("TOEPLITZ"), "--set", "w", "--bound", bound]) == 2
    assert capsys.readouterr().out == ""
