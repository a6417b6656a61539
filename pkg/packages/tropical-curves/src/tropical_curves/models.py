import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Iterator

from pydantic import BaseModel, ConfigDict, field_serializer, field_validator
from tropical_polyhedra.rational import rat_to_str, to_rat

from tropical_curves.consts import DEGREE
from tropical_curves.exceptions import CoefficientFormatError

LatticePoint = tuple[int, int]


class CoeffMatrix(BaseModel):
    """Coefficients A_ij of a tropical polynomial of bidegree (3,3).

    `coefficients[i][j]` belongs to the monomial x^i y^j, i.e. the lattice point
    (i, j) of the square [0,3]^2. Values are exact rationals, read from and
    written to JSON as strings like "-7/2".
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    coefficients: list[list[Fraction]]

    @field_validator("coefficients", mode="before")
    @classmethod
    def parse_rationals(cls, value: Any) -> list[list[Fraction]]:
        if not isinstance(value, (list, tuple)) or len(value) != DEGREE + 1:
            raise ValueError(f"Expected {DEGREE + 1} rows of coefficients")
        rows = []
        for row in value:
            if not isinstance(row, (list, tuple)) or len(row) != DEGREE + 1:
                raise ValueError(f"Expected rows of length {DEGREE + 1}, got {row!r}")
            rows.append([to_rat(x) for x in row])
        return rows

    @field_serializer("coefficients")
    def serialize_rationals(self, value: list[list[Fraction]]) -> list[list[str]]:
        return [[rat_to_str(x) for x in row] for row in value]

    def __getitem__(self, point: LatticePoint) -> Fraction:
        i, j = point
        return self.coefficients[i][j]

    def items(self) -> Iterator[tuple[LatticePoint, Fraction]]:
        for i, row in enumerate(self.coefficients):
            for j, a in enumerate(row):
                yield (i, j), a

    def perturbed(self, delta: Fraction) -> "CoeffMatrix":
        """A_ij + i*j*delta."""
        return CoeffMatrix(
            coefficients=[[a + i * j * delta for j, a in enumerate(row)] for i, row in enumerate(self.coefficients)]
        )

    @classmethod
    def from_json(cls, path: Path | str) -> "CoeffMatrix":
        try:
            return cls.model_validate_json(Path(path).read_text())
        except (OSError, ValueError) as e:
            raise CoefficientFormatError(f"Could not read coefficients from {path}: {e}") from e

    def to_json(self) -> str:
        return json.dumps(self.model_dump(mode="json"), indent=2)
