import json

import pytest
from typer.testing import CliRunner

from tritangent_classes import cli
from tritangent_classes.cli import app, run_analysis
from tritangent_classes.config import AnalysisConfig
from tritangent_classes.consts import EXIT_BAD_INPUT, EXIT_CHECKS_FAILED, EXIT_NON_GENERIC, EXIT_NOT_SMOOTH, EXIT_OK
from tritangent_classes.exceptions import NonGenericCurveError, PerturbationError

runner = CliRunner()


def test_random_is_deterministic(tmp_path):
    out = tmp_path / "curve.json"
    first = runner.invoke(app, ["random", "--seed", "11"])
    second = runner.invoke(app, ["random", "--seed", "11", "--out", str(out)])
    assert first.exit_code == 0
    assert second.exit_code == 0
    assert json.loads(first.stdout) == json.loads(out.read_text())


def test_analyze_rejects_a_curve_that_is_not_smooth(tmp_path):
    path = tmp_path / "flat.json"
    path.write_text(json.dumps({"coefficients": [["0"] * 4] * 4}))
    result = runner.invoke(app, ["analyze", "--input", str(path), "--out", str(tmp_path / "out")])
    assert result.exit_code == EXIT_NOT_SMOOTH
    assert "not smooth" in result.output


def test_analyze_rejects_bad_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"coefficients": [["0"] * 3] * 4}))
    result = runner.invoke(app, ["analyze", "--input", str(path)])
    assert result.exit_code == EXIT_BAD_INPUT


def test_analyze_needs_exactly_one_source(tmp_path):
    result = runner.invoke(app, ["analyze"])
    assert result.exit_code == EXIT_BAD_INPUT
    assert "Exactly one" in result.output


def test_render_unknown_class(tmp_path, generic_report):
    path = generic_report.save(tmp_path / "report.json")
    result = runner.invoke(app, ["render", "--report", str(path), "--class", "99", "--out", str(tmp_path)])
    assert result.exit_code == EXIT_CHECKS_FAILED
    assert "Unknown class id 99" in result.output


def test_analyze_rejects_a_negative_retry_limit(tmp_path):
    result = runner.invoke(app, ["analyze", "--seed", "1", "--retries", "-1", "--out", str(tmp_path)])
    assert result.exit_code == EXIT_BAD_INPUT
    assert "Invalid configuration" in result.output


def test_analyze_gives_up_on_a_curve_that_stays_non_generic(monkeypatch, tmp_path):
    def always_non_generic(curve, check_d4=False):
        raise NonGenericCurveError("empty bounded part", "class 1")

    monkeypatch.setattr(cli, "verify_report", always_non_generic)
    result = runner.invoke(app, ["analyze", "--seed", "3", "--retries", "1", "--out", str(tmp_path)])
    assert result.exit_code == EXIT_NON_GENERIC
    assert "non-generic curve" in result.output
    assert not (tmp_path / "report.json").exists()


@pytest.mark.parametrize("error", [PerturbationError("lands on an endpoint"), NonGenericCurveError("Σ ≠ 8")])
def test_run_analysis_perturbs_after_a_failed_round(monkeypatch, tmp_path, generic_report, error):
    rounds = []

    def flaky(curve, check_d4=False):
        rounds.append(curve.coefficients)
        if len(rounds) == 1:
            raise error
        return generic_report.model_copy(deep=True)

    monkeypatch.setattr(cli, "verify_report", flaky)
    report, code = run_analysis(AnalysisConfig(random_seed=3, output_dir=tmp_path))
    assert code == EXIT_OK
    assert report.perturbation_rounds == 1
    assert rounds[0] != rounds[1]
