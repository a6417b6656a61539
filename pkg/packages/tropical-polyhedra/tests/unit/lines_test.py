from fractions import Fraction

import pytest
from tropical_polyhedra import ArrangementError, Line2, LineArrangement


def test_line_normalization():
    assert Line2.make(-2, 0, 4) == Line2(1, 0, -2)
    assert Line2.through((1, 1), (Fraction(1, 2), 0)) == Line2(2, 2, 1)
    assert Line2(2, 2, 1).direction == (-1, 1)


def test_three_general_lines(triangle_lines):
    arr = LineArrangement(triangle_lines)
    assert len(arr.vertices) == 3
    assert len(arr.edges) == 9
    assert len(arr.regions) == 7
    bounded = [r for r in arr.regions if not r.rays]
    assert len(bounded) == 1
    assert set(bounded[0].vertices) == {(0, 0), (1, 0), (0, 1)}


def test_grid(grid_lines):
    arr = LineArrangement(grid_lines)
    assert (len(arr.vertices), len(arr.edges), len(arr.regions)) == (4, 12, 9)


def test_cells_contain_their_points(triangle_lines):
    arr = LineArrangement(triangle_lines)
    for cell in arr.cells:
        assert cell.contains(cell.point)
        assert arr.locate(cell.point) is cell
        for f in cell.faces:
            assert arr.cells[f].dim < cell.dim
            assert cell.contains(arr.cells[f].point, closed=True)
            assert not cell.contains(arr.cells[f].point)


def test_range_of(triangle_lines):
    arr = LineArrangement(triangle_lines)
    inner = next(r for r in arr.regions if not r.rays)
    assert inner.range_of((1, 1)) == (0, 1)
    outer = arr.locate((Fraction(-1), Fraction(-1)))
    assert outer.range_of((1, 1)) == (None, 0)


def test_parallel_lines_rejected():
    with pytest.raises(ArrangementError):
        LineArrangement([Line2.make(1, 0, 0), Line2.make(1, 0, 1)])
