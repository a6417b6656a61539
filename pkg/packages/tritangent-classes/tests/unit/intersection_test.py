import random
from fractions import Fraction

import pytest
from tropical_curves import Curve11Param, random_smooth_curve

from tritangent_classes.exceptions import PerturbationError
from tritangent_classes.tangency import intersection
from tritangent_classes.tangency.intersection import (
    crossing,
    leg_is_even,
    overlap,
    perturbation_for,
    stable_intersection,
)
from tritangent_classes.tangency.models import Atom, PerturbationScheme, Piece

F = Fraction


def test_crossing_limit_point_and_multiplicity():
    p = Piece("h", (F(0), F(0)), (1, 0), None)
    q = Piece("e", (F(2), F(-1)), (1, 2), F(3))
    assert crossing(p, q, (1, 13)) == ((F(5, 2), F(0)), 2)


def test_parallel_pieces_never_cross():
    p = Piece("h", (F(0), F(0)), (1, 0), None)
    q = Piece("e", (F(1), F(0)), (1, 0), F(3))
    assert crossing(p, q, (1, 13)) is None


def test_overlap_of_collinear_pieces_is_a_segment():
    p = Piece("h", (F(0), F(0)), (1, 0), F(4))
    q = Piece("l", (F(2), F(0)), (1, 0), None)
    atom = overlap(p, q)
    assert atom == Atom(start=(F(2), F(0)), lambda_piece="h", gamma_piece="l", direction=(1, 0), length=F(2))
    assert atom.meets(Atom(start=(F(4), F(0)), lambda_piece="x", gamma_piece="y"))
    assert not atom.meets(Atom(start=(F(5), F(0)), lambda_piece="x", gamma_piece="y"))


def test_overlap_of_disjoint_pieces():
    p = Piece("h", (F(0), F(0)), (1, 0), F(1))
    q = Piece("v", (F(5), F(-1)), (0, 1), F(3))
    assert overlap(p, q) is None


def test_perturbation_avoids_curve_directions(generic_curve):
    scheme = perturbation_for(generic_curve)
    for d in scheme.avoided:
        assert scheme.g[0] * d[1] - scheme.g[1] * d[0] != 0


@pytest.mark.parametrize(
    "lam",
    [
        Curve11Param.make(3, 4, -1),
        Curve11Param.make(0, 0, 2),
        Curve11Param.make(F(5, 2), 1, 0),
        Curve11Param.make(-1000, -1000, 1),
    ],
)
def test_total_multiplicity_is_six(quadratic_curve, generic_curve, lam):
    for curve in (quadratic_curve, generic_curve):
        assert sum(c.stable_mult for c in stable_intersection(lam, curve)) == 6


def test_far_curve_meets_six_legs_transversally(quadratic_curve):
    components = stable_intersection(Curve11Param.make(-1000, -1000, 1), quadratic_curve)
    assert [c.stable_mult for c in components] == [1] * 6
    assert all(c.dim == 0 for c in components)


def test_vertex_on_diagonal_edge(quadratic_curve):
    lam = Curve11Param.make(3, 4, -1)
    component = next(c for c in stable_intersection(lam, quadratic_curve) if c.contains(lam.v0))
    assert component.dim == 0
    assert component.stable_mult == 2
    assert component.lambda_vertices == frozenset({"v0"})


def test_multiplicities_do_not_depend_on_the_perturbation(quadratic_curve):
    lam = Curve11Param.make(3, 4, -1)
    first = stable_intersection(lam, quadratic_curve)
    second = stable_intersection(lam, quadratic_curve, PerturbationScheme(g=(1, 29)))
    assert [(c.atoms, c.stable_mult) for c in first] == [(c.atoms, c.stable_mult) for c in second]


def test_leg_parity(quadratic_curve):
    scheme = perturbation_for(quadratic_curve)
    base = (F(-100), F(-100))
    # the east leg crosses the three south legs of Γ
    assert leg_is_even(quadratic_curve, base, (1, 0), scheme) is False
    assert leg_is_even(quadratic_curve, base, (-1, 0), scheme) is True


def _random_members(seed: int, count: int) -> list[Curve11Param]:
    # denominator 97 keeps Λ off the vertices and edges of the test curves
    rng = random.Random(seed)

    def coordinate(span: int) -> Fraction:
        return rng.randint(-span, span) + F(rng.randint(1, 96), 97)

    return [Curve11Param.make(coordinate(60), coordinate(60), coordinate(30)) for _ in range(count)]


@pytest.fixture(scope="module")
def sampled_curves(generic_curve):
    return [generic_curve] + [random_smooth_curve(seed)[1] for seed in range(3)]


def test_total_multiplicity_of_random_members(sampled_curves):
    for curve in sampled_curves:
        for lam in _random_members(5, 50):
            assert sum(c.stable_mult for c in stable_intersection(lam, curve)) == 6


def test_random_members_do_not_depend_on_the_perturbation(generic_curve):
    other = perturbation_for(generic_curve, start=(1, 40))
    assert other.g != perturbation_for(generic_curve).g
    for lam in _random_members(17, 100):
        first = stable_intersection(lam, generic_curve)
        second = stable_intersection(lam, generic_curve, other)
        assert [(c.atoms, c.stable_mult) for c in first] == [(c.atoms, c.stable_mult) for c in second]


def test_wrong_total_multiplicity_raises(monkeypatch, quadratic_curve):
    monkeypatch.setattr(intersection, "intersect_pieces", lambda *args: [])
    with pytest.raises(PerturbationError, match="total multiplicity 0"):
        stable_intersection(Curve11Param.make(0, 0, 2), quadratic_curve)
