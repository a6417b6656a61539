from fractions import Fraction
from types import SimpleNamespace

import pytest
from tropical_curves import Curve11Param
from tropical_polyhedra import CellComplex3, HalfSpace3, equality, make_polyhedron

from tritangent_classes.complexes import TritangentClass, bounded_subcomplex, nonspecial_subcomplex
from tritangent_classes.complexes.classes import unbounded_predicates
from tritangent_classes.exceptions import DisconnectedComplexError, NonGenericCurveError

F = Fraction


def _cell(x, y, length, side=1, special=False):
    return SimpleNamespace(
        key=(0, 0, 0),
        side=side,
        member=Curve11Param.make(x, y, length),
        tangency=SimpleNamespace(special=special),
    )


def _origin():
    return make_polyhedron([*equality((1, 0, 0), 0), *equality((0, 1, 0), 0), *equality((0, 0, 1), 0)])


def _ray():
    return make_polyhedron([*equality((0, 1, 0), 0), *equality((0, 0, 1), 0), HalfSpace3.make((1, 0, 0), 0, strict=True)])


@pytest.fixture
def predicates(quadratic_curve):
    return unbounded_predicates(SimpleNamespace(curve=quadratic_curve))


def test_open_corner_chambers_are_removed(predicates):
    assert predicates["U0+"](_cell(-100, -100, 1))
    assert predicates["U1+"](_cell(99, 99, 1))
    assert predicates["U0-"](_cell(100, -100, 1))
    assert not predicates["U0+"](_cell(-100, -100, 1, side=-1))


def test_corner_chamber_boundary_stays(quadratic_curve, predicates):
    # x = 2 is the south leg between the chambers (0, 0) and (1, 0)
    on_leg = _cell(2, -100, 1)
    assert quadratic_curve.maximizers((F(2), F(-100))) == {(0, 0), (1, 0)}
    assert not any(p(on_leg) for p in predicates.values())


def test_vertex_of_the_corner_chamber_is_a_ray_cell(quadratic_curve, predicates):
    at_vertex = _cell(2, 3, 1)
    assert quadratic_curve.maximizers((F(2), F(3))) == {(0, 0), (1, 0), (0, 1)}
    assert not predicates["U0+"](at_vertex)
    assert predicates["R0+"](at_vertex)


def test_empty_bounded_part_raises(quadratic_curve):
    tc = SimpleNamespace(curve=quadratic_curve, cells=[_cell(-100, -100, 1)])
    cls = TritangentClass(id=4, complex=CellComplex3.from_cells([_origin()]))
    with pytest.raises(NonGenericCurveError, match="empty bounded part"):
        bounded_subcomplex(cls, tc)


def test_empty_retry_is_not_accepted(quadratic_curve):
    # the lower-right chamber only matches on ℓ < 0 after the sign switch,
    # which then removes everything
    tc = SimpleNamespace(curve=quadratic_curve, cells=[_cell(100, -100, -1, side=-1)])
    cls = bounded_subcomplex(TritangentClass(id=5, complex=CellComplex3.from_cells([_ray()])), tc)
    assert len(cls.bounded) == 1
    assert not cls.unbounded_sign_switched
    assert not cls.bounded.cells[0].is_bounded


def test_empty_nonspecial_part_is_disconnected(quadratic_curve):
    k = CellComplex3.from_cells([_origin()])
    tc = SimpleNamespace(curve=quadratic_curve, cells=[_cell(3, 4, -1, special=True)])
    cls = TritangentClass(id=6, complex=k, bounded=k)
    with pytest.raises(DisconnectedComplexError):
        nonspecial_subcomplex(cls, tc)
    assert len(nonspecial_subcomplex(cls, tc, strict=False).nonspecial) == 0
