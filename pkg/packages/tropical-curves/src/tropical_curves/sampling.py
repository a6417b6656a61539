import random

from loguru import logger

from tropical_curves.consts import BASE_CURVATURE, DEGREE, NOISE_RANGE, SAMPLING_ATTEMPTS
from tropical_curves.curve import CurveGamma, build_curve
from tropical_curves.exceptions import NotSmoothError
from tropical_curves.models import CoeffMatrix


def _draw(rng: random.Random, curvature: int) -> CoeffMatrix:
    lo, hi = NOISE_RANGE
    return CoeffMatrix(
        coefficients=[
            [-curvature * (i * i + i * j + j * j) + rng.randint(lo, hi) for j in range(DEGREE + 1)]
            for i in range(DEGREE + 1)
        ]
    )


def random_smooth_curve(seed: int) -> tuple[CoeffMatrix, CurveGamma]:
    """Rejection-sample integer coefficients until the curve is smooth.

    The concave base term favours unimodular triangulations; after every
    `SAMPLING_ATTEMPTS` rejections its weight doubles. Deterministic per seed.
    """
    rng = random.Random(seed)
    curvature = BASE_CURVATURE
    attempts = 0
    while True:
        coeffs = _draw(rng, curvature)
        attempts += 1
        try:
            curve = build_curve(coeffs)
        except NotSmoothError as e:
            logger.trace(f"Seed {seed}, attempt {attempts}: {e}")
            if attempts % SAMPLING_ATTEMPTS == 0:
                curvature *= 2
                logger.debug(f"Seed {seed}: widening the concave base to {curvature}")
            continue
        logger.debug(f"Seed {seed}: smooth curve after {attempts} attempts")
        return coeffs, curve
