from fractions import Fraction

from tropical_polyhedra import Line2

from tritangent_classes.complexes.orders import OrderRelation, compare_w, order_lines
from tritangent_classes.consts import ORDER_WEIGHTS


def test_compare_w():
    v, w = (Fraction(0), Fraction(0)), (Fraction(1), Fraction(2))
    assert compare_w(v, w, (1, -1)).relation == OrderRelation.GREATER
    assert compare_w(v, w, (1, 1)).relation == OrderRelation.LESS
    assert compare_w(v, (Fraction(3), Fraction(3)), (1, -1)).relation == OrderRelation.EQUAL


def test_order_lines_cover_curve_and_vertex_levels(quadratic_curve):
    lines = set(order_lines(quadratic_curve))
    for vertex in quadratic_curve.vertices:
        for weight in ORDER_WEIGHTS.values():
            assert Line2.through(weight, vertex.point) in lines
    for piece in quadratic_curve.pieces:
        dx, dy = piece.direction
        assert Line2.through((-dy, dx), piece.start) in lines


def test_quadratic_curve_has_honeycomb_directions(quadratic_curve):
    assert {p.direction for p in quadratic_curve.edges} <= {(1, 0), (0, 1), (1, 1)}
