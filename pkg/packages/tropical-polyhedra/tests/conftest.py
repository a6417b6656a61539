from fractions import Fraction

import pytest
from tropical_polyhedra import HalfSpace3, Line2, equality, make_polyhedron


def box(lo: tuple, hi: tuple) -> list[HalfSpace3]:
    halfspaces = []
    for axis in range(3):
        e = [0, 0, 0]
        e[axis] = 1
        if lo[axis] == hi[axis]:
            halfspaces.extend(equality(e, lo[axis]))
            continue
        halfspaces.append(HalfSpace3.make(e, lo[axis]))
        halfspaces.append(HalfSpace3.make([-x for x in e], -hi[axis]))
    return halfspaces


@pytest.fixture
def unit_cube():
    return make_polyhedron(box((0, 0, 0), (1, 1, 1)))


@pytest.fixture
def unit_segment():
    return make_polyhedron(box((0, 0, 0), (1, 0, 0)))


@pytest.fixture
def triangle_lines() -> list[Line2]:
    return [Line2.make(1, 0, 0), Line2.make(0, 1, 0), Line2.make(1, 1, 1)]


@pytest.fixture
def grid_lines() -> list[Line2]:
    return [
        Line2.make(1, 0, 0),
        Line2.make(1, 0, 1),
        Line2.make(0, 1, 0),
        Line2.make(0, 1, Fraction(1, 2)),
    ]
