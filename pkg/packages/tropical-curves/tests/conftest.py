from pathlib import Path

import pytest
from tropical_curves import CoeffMatrix, CurveGamma, build_curve

TEST_DIR = Path(__file__).parent
ASSET_PATH = TEST_DIR / "assets"
QUADRATIC_PATH = ASSET_PATH / "quadratic.json"
GENERIC_PATH = ASSET_PATH / "generic.json"


@pytest.fixture
def quadratic_table() -> list[list[int]]:
    return [[-(2 * i * i + 2 * i * j + 3 * j * j) for j in range(4)] for i in range(4)]


@pytest.fixture
def quadratic() -> CoeffMatrix:
    return CoeffMatrix.from_json(QUADRATIC_PATH)


@pytest.fixture
def quadratic_curve(quadratic: CoeffMatrix) -> CurveGamma:
    return build_curve(quadratic)


@pytest.fixture
def generic_curve() -> CurveGamma:
    return build_curve(CoeffMatrix.from_json(GENERIC_PATH))
