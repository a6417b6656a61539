from fractions import Fraction

import pytest
from tropical_polyhedra import (
    EmptyCellError,
    HalfSpace3,
    equality,
    interior_point,
    make_polyhedron,
)


def test_halfspace_normalization():
    assert HalfSpace3.make((2, 4, 0), 3) == HalfSpace3.make((1, 2, 0), Fraction(3, 2))
    assert HalfSpace3.make(("1/2", 0, 0), "1/4").normal == (1, 0, 0)
    with pytest.raises(ValueError):
        HalfSpace3.make((0, 0, 0), 1)


def test_cube(unit_cube):
    assert unit_cube.dim == 3
    assert len(unit_cube.vertices) == 8
    assert unit_cube.is_bounded
    half = Fraction(1, 2)
    assert interior_point(unit_cube) == (half, half, half)


def test_segment_interior_point(unit_segment):
    assert unit_segment.dim == 1
    assert interior_point(unit_segment) == (Fraction(1, 2), 0, 0)


def test_quadrant_interior_point():
    quadrant = make_polyhedron(
        [HalfSpace3.make((1, 0, 0), 0), HalfSpace3.make((0, 1, 0), 0), *equality((0, 0, 1), 0)]
    )
    assert quadrant.dim == 2
    assert quadrant.vertices == ((0, 0, 0),)
    assert set(quadrant.rays) == {(1, 0, 0), (0, 1, 0)}
    assert interior_point(quadrant) == (1, 1, 0)


def test_line_has_lineality():
    line = make_polyhedron([*equality((0, 1, 0), 0), *equality((0, 0, 1), 0)])
    assert line.dim == 1
    assert set(line.rays) == {(1, 0, 0), (-1, 0, 0)}
    assert not line.is_bounded
    assert interior_point(line) == (0, 0, 0)


def test_whole_space():
    space = make_polyhedron([])
    assert space.dim == 3
    assert len(space.rays) == 6


def test_open_segment_contains_only_interior():
    segment = make_polyhedron(
        [
            HalfSpace3.make((1, 0, 0), 0, strict=True),
            HalfSpace3.make((-1, 0, 0), -1, strict=True),
            *equality((0, 1, 0), 0),
            *equality((0, 0, 1), 0),
        ]
    )
    assert segment.dim == 1
    assert segment.contains((Fraction(1, 3), 0, 0))
    assert not segment.contains((0, 0, 0))
    assert segment.contains((0, 0, 0), closed=True)


def test_infeasible_is_empty():
    empty = make_polyhedron([HalfSpace3.make((1, 0, 0), 1), HalfSpace3.make((-1, 0, 0), 0)])
    assert empty.is_empty
    assert empty.dim == -1
    with pytest.raises(EmptyCellError, match="empty cell"):
        interior_point(empty)


def test_strict_implicit_equality_is_empty():
    empty = make_polyhedron(
        [HalfSpace3.make((1, 0, 0), 0, strict=True), HalfSpace3.make((-1, 0, 0), 0)]
    )
    assert empty.is_empty


def test_duplicate_halfspaces_are_ignored(unit_cube):
    again = make_polyhedron(list(unit_cube.halfspaces) * 2)
    assert again.vertices == unit_cube.vertices
    assert again.halfspaces == unit_cube.halfspaces
