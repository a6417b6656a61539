import pytest
from tropical_curves import build_curve, random_smooth_curve


def test_same_seed_same_matrix():
    first, _ = random_smooth_curve(42)
    second, _ = random_smooth_curve(42)
    assert first == second


@pytest.mark.parametrize("seed", [0, 1, 2, 3, 4])
def test_samples_are_smooth(seed):
    coeffs, curve = random_smooth_curve(seed)
    assert len(curve.subdivision.triangles) == 18
    assert len(build_curve(coeffs).vertices) == 18
    assert all(a.denominator == 1 for _, a in coeffs.items())
