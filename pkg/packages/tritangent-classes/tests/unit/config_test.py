from fractions import Fraction
from pathlib import Path

import pytest
from pydantic import ValidationError

from tritangent_classes.config import AnalysisConfig
from tritangent_classes.consts import RETRY_DELTA


def test_defaults():
    config = AnalysisConfig(random_seed=7)
    assert config.perturbation_delta == RETRY_DELTA
    assert config.perturbation_retry_limit == 3
    assert config.render is False


def test_yaml_round_trip(tmp_path):
    path = tmp_path / "config.yaml"
    config = AnalysisConfig(input_path=Path("curve.json"), perturbation_delta="1/1000", render=True)
    config.save_to_yaml(path)
    assert "1/1000" in path.read_text()
    assert AnalysisConfig.from_yaml(path) == config


def test_overrides_replace_the_source(tmp_path):
    path = tmp_path / "config.yaml"
    AnalysisConfig(input_path=Path("curve.json")).save_to_yaml(path)
    config = AnalysisConfig.from_yaml(path, random_seed=5, render=None)
    assert config.random_seed == 5
    assert config.input_path is None
    assert config.render is False


@pytest.mark.parametrize(
    "kwargs",
    [
        {},
        {"input_path": Path("a.json"), "random_seed": 1},
        {"random_seed": 1, "perturbation_delta": "-1/10"},
        {"random_seed": 1, "perturbation_delta": 0.001},
        {"random_seed": 1, "perturbation_retry_limit": -1},
    ],
)
def test_invalid_configs(kwargs):
    with pytest.raises(ValidationError):
        AnalysisConfig(**kwargs)


def test_delta_parsing():
    assert AnalysisConfig(random_seed=1, perturbation_delta="3/7").perturbation_delta == Fraction(3, 7)
