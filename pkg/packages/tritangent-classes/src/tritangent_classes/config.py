import os
from fractions import Fraction
from pathlib import Path
from typing import Any, TypeAlias, Union

import yaml
from pydantic import BaseModel, ConfigDict, field_serializer, field_validator, model_validator
from tropical_polyhedra.rational import rat_to_str, to_rat

from tritangent_classes.consts import DEFAULT_OUTPUT_DIR, DEFAULT_RETRY_LIMIT, RETRY_DELTA

PathLike: TypeAlias = Union[str, os.PathLike, Path]


class AnalysisConfig(BaseModel):
    """Settings of one `tritangents analyze` run."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    input_path: Path | None = None
    random_seed: int | None = None
    perturbation_retry_limit: int = DEFAULT_RETRY_LIMIT
    perturbation_delta: Fraction = RETRY_DELTA
    render: bool = False
    output_dir: Path = Path(DEFAULT_OUTPUT_DIR)
    check_d4: bool = False
    log_level: str = "INFO"

    @field_validator("perturbation_delta", mode="before")
    @classmethod
    def parse_delta(cls, value: Any) -> Fraction:
        delta = to_rat(value)
        if delta <= 0:
            raise ValueError(f"perturbation_delta must be positive, got {value!r}")
        return delta

    @field_validator("perturbation_retry_limit")
    @classmethod
    def validate_retry_limit(cls, value: int) -> int:
        if value < 0:
            raise ValueError("perturbation_retry_limit cannot be negative")
        return value

    @model_validator(mode="after")
    def exactly_one_source(self) -> "AnalysisConfig":
        if (self.input_path is None) == (self.random_seed is None):
            raise ValueError("Exactly one of input_path and random_seed must be set")
        return self

    @field_serializer("perturbation_delta")
    def serialize_delta(self, value: Fraction) -> str:
        return rat_to_str(value)

    def save_to_yaml(self, path: PathLike) -> None:
        yaml_dump = yaml.safe_dump(self.model_dump(mode="json"), indent=2, sort_keys=False)
        Path(path).write_text(yaml_dump)

    @classmethod
    def from_yaml(cls, path: PathLike, **overrides: Any) -> "AnalysisConfig":
        with open(path, "r") as f:
            config_dict = yaml.safe_load(f) or {}
        overrides = {k: v for k, v in overrides.items() if v is not None}
        if "input_path" in overrides:
            config_dict.pop("random_seed", None)
        if "random_seed" in overrides:
            config_dict.pop("input_path", None)
        config_dict.update(overrides)
        return cls(**config_dict)
