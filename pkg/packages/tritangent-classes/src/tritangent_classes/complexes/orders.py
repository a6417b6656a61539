"""Partial orders on R^2 relative to a weight and the planar lines they induce."""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from tropical_curves import CurveGamma
from tropical_polyhedra import Line2
from tropical_polyhedra.rational import IntVec2, dot

from tritangent_classes.consts import ORDER_WEIGHTS


class OrderRelation(str, Enum):
    LESS = "<"
    EQUAL = "="
    GREATER = ">"


@dataclass(frozen=True)
class PartialOrderTag:
    weight: IntVec2
    relation: OrderRelation


def compare_w(v: Sequence[Fraction], other: Sequence[Fraction], weight: IntVec2) -> PartialOrderTag:
    """v ≺_w v' iff v.w < v'.w."""
    a, b = dot(v, weight), dot(other, weight)
    if a < b:
        relation = OrderRelation.LESS
    elif a > b:
        relation = OrderRelation.GREATER
    else:
        relation = OrderRelation.EQUAL
    return PartialOrderTag(weight=weight, relation=relation)


def order_lines(curve: CurveGamma) -> list[Line2]:
    """Level lines of the four weights through every vertex of Γ, and the supporting lines of Γ."""
    lines: dict[Line2, None] = {}
    for vertex in curve.vertices:
        for weight in ORDER_WEIGHTS.values():
            lines[Line2.through(weight, vertex.point)] = None
    for piece in curve.pieces:
        dx, dy = piece.direction
        lines[Line2.through((-dy, dx), piece.start)] = None
    return list(lines)
