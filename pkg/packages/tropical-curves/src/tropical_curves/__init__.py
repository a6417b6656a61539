from tropical_curves.curve import (
    CurveGamma,
    GammaPiece,
    GammaVertex,
    PieceKind,
    Stratum,
    StratumKind,
    build_curve,
    check_counts,
    locate,
)
from tropical_curves.curve11 import Curve11Leg, Curve11Param, segre_psi, segre_psi_inverse
from tropical_curves.d4 import D4Element, canonical_element, d4_apply, transform_coefficients
from tropical_curves.exceptions import (
    CoefficientFormatError,
    CurveError,
    DegenerateCurveError,
    NotSmoothError,
)
from tropical_curves.models import CoeffMatrix
from tropical_curves.sampling import random_smooth_curve

__version__ = "0.1.0"

__all__ = [
    "CoeffMatrix",
    "CoefficientFormatError",
    "Curve11Leg",
    "Curve11Param",
    "CurveError",
    "CurveGamma",
    "D4Element",
    "DegenerateCurveError",
    "GammaPiece",
    "GammaVertex",
    "NotSmoothError",
    "PieceKind",
    "Stratum",
    "StratumKind",
    "build_curve",
    "check_counts",
    "canonical_element",
    "d4_apply",
    "locate",
    "random_smooth_curve",
    "segre_psi",
    "segre_psi_inverse",
    "transform_coefficients",
]
