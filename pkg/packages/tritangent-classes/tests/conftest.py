from pathlib import Path

import pytest
from tropical_curves import CoeffMatrix, CurveGamma, build_curve

from tritangent_classes.complexes import analyze_classes, tritangent_complex
from tritangent_classes.lifting.report import analyze, build_report

TEST_DIR = Path(__file__).parent
ASSET_PATH = TEST_DIR / "assets"
QUADRATIC_PATH = ASSET_PATH / "quadratic.json"
GENERIC_PATH = ASSET_PATH / "generic.json"


@pytest.fixture
def quadratic_curve() -> CurveGamma:
    return build_curve(CoeffMatrix.from_json(QUADRATIC_PATH))


@pytest.fixture(scope="session")
def generic_curve() -> CurveGamma:
    return build_curve(CoeffMatrix.from_json(GENERIC_PATH))


@pytest.fixture(scope="session")
def generic_complex(generic_curve):
    return tritangent_complex(generic_curve)


@pytest.fixture(scope="session")
def generic_classes(generic_complex):
    return analyze_classes(generic_complex)


@pytest.fixture(scope="session")
def generic_report(generic_curve):
    return build_report(analyze(generic_curve))
