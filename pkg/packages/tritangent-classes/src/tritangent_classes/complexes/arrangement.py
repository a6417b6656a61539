"""The arrangement of hyperplanes in (v0, ℓ)-space induced by Γ.

A point (x, y, ℓ) stands for the (1,1)-curve with v0 = (x, y). On the side
ℓ > 0 its second vertex is v1 = (x + ℓ, y + ℓ), on the side ℓ < 0 it is
v1 = (x + ℓ, y - ℓ). Every hyperplane of the arrangement constrains v0 alone,
v1 alone, or ℓ, so an open cell is a triple (side, σ0, σ1) of planar cells
with v0 ∈ σ0 and v1 ∈ σ1. Cells are built on demand and cached.
"""

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from loguru import logger
from tropical_curves import Curve11Param, CurveGamma
from tropical_curves.curve11 import COMPASS
from tropical_polyhedra import (
    Cell2,
    HalfSpace3,
    LineArrangement,
    Polyhedron3,
    equality,
    interior_point,
    make_polyhedron,
)
from tropical_polyhedra.rational import IntVec2

from tritangent_classes.consts import ORDER_WEIGHTS, SIDE_LEGS
from tritangent_classes.complexes.orders import order_lines
from tritangent_classes.tangency.intersection import leg_is_even, perturbation_for
from tritangent_classes.tangency.models import PerturbationScheme

CellKey = tuple[int, int, int]

SIDES = (1, -1, 0)
# v1 - v0 is a multiple of this direction on each side
SIDE_DIRECTIONS: dict[int, IntVec2] = {1: (1, 1), -1: (-1, 1)}
# the functional constant along that direction
SIDE_STRIPS: dict[int, IntVec2] = {1: ORDER_WEIGHTS["diagonal"], -1: ORDER_WEIGHTS["antidiagonal"]}


def lift_normal(a: int, b: int, vertex: str, side: int) -> tuple[int, int, int]:
    """Normal of {a.v = c} in (x, y, ℓ) for v = v0 or v = v1 on the given side."""
    if vertex == "v0" or side == 0:
        return (a, b, 0)
    return (a, b, a + side * b)


def lift(cell: Cell2, vertex: str, side: int) -> list[HalfSpace3]:
    halfspaces = []
    for c in cell.constraints:
        normal = lift_normal(c.a, c.b, vertex, side)
        if c.strict:
            halfspaces.append(HalfSpace3.make(normal, c.c, strict=True))
        else:
            halfspaces.extend(equality(normal, c.c))
    return halfspaces


def side_constraints(side: int) -> list[HalfSpace3]:
    if side == 0:
        return list(equality((0, 0, 1), 0))
    return [HalfSpace3.make((0, 0, side), 0, strict=True)]


def representative(cell: Polyhedron3) -> Curve11Param:
    x, y, length = interior_point(cell)
    return Curve11Param(v0=(x, y), length=length)


@dataclass(frozen=True)
class Bucket:
    kind: str
    value: Fraction | int


class Arrangement3:
    """Lazily enumerated cells of the arrangement, with leg-parity pruning."""

    def __init__(self, curve: CurveGamma, scheme: PerturbationScheme | None = None):
        self.curve = curve
        self.scheme = scheme or perturbation_for(curve)
        self.planar = LineArrangement(order_lines(curve))
        self._cells: dict[CellKey, Polyhedron3] = {}
        self._legs: dict[tuple[int, str], bool] = {}
        self._families: dict[IntVec2, list[Fraction]] = {}
        logger.info(
            f"Planar refinement: {len(self.planar.lines)} lines, {len(self.planar.cells)} cells"
        )

    @property
    def planar_cells(self) -> list[Cell2]:
        return self.planar.cells

    def hyperplanes(self, side: int = 1) -> list[HalfSpace3]:
        """Boundaries a.v0 = c, a.v1 = c of every planar line on one side, and ℓ = 0."""
        found: dict[HalfSpace3, None] = {}
        for line in self.planar.lines:
            for vertex in ("v0", "v1"):
                found[HalfSpace3.make(lift_normal(line.a, line.b, vertex, side), line.c)] = None
        found[HalfSpace3.make((0, 0, 1), 0)] = None
        return list(found)

    def cell(self, key: CellKey) -> Polyhedron3:
        """The relatively open cell (side, σ0, σ1); empty cells have dim -1."""
        if key not in self._cells:
            side, i, j = key
            cells = self.planar.cells
            halfspaces = side_constraints(side) + lift(cells[i], "v0", side)
            if side != 0 or i != j:
                halfspaces += lift(cells[j], "v1", side)
            self._cells[key] = make_polyhedron(halfspaces)
        return self._cells[key]

    def legs_even(self, index: int, compasses: tuple[str, ...]) -> bool:
        cell = self.planar.cells[index]
        for compass in compasses:
            if (index, compass) not in self._legs:
                self._legs[(index, compass)] = leg_is_even(
                    self.curve, cell.point, COMPASS[compass], self.scheme
                )
            if not self._legs[(index, compass)]:
                return False
        return True

    def _family(self, weight: IntVec2) -> list[Fraction]:
        if weight not in self._families:
            values = {weight[0] * v.point[0] + weight[1] * v.point[1] for v in self.curve.vertices}
            self._families[weight] = sorted(values)
        return self._families[weight]

    def bucket(self, cell: Cell2, weight: IntVec2) -> Bucket:
        """The level line or open strip of the weight's family that holds the cell."""
        values = self._family(weight)
        lo, hi = cell.range_of(weight)
        if lo is not None and lo == hi:
            k = bisect_left(values, lo)
            if k < len(values) and values[k] == lo:
                return Bucket("line", lo)
            return Bucket("strip", k)
        if lo is not None and hi is not None:
            return Bucket("strip", bisect_left(values, (lo + hi) / 2))
        if lo is None and hi is not None:
            return Bucket("strip", bisect_left(values, hi))
        if hi is None and lo is not None:
            return Bucket("strip", bisect_right(values, lo))
        raise ValueError(f"Planar cell {cell.id} crosses every level line of {weight}")

    def candidate_keys(self) -> Iterator[CellKey]:
        """Keys of the non-empty cells whose legs carry no odd leg-local component."""
        cells = self.planar.cells
        total = 0
        for side in SIDES:
            first, second = SIDE_LEGS[side]
            starts = [c.id for c in cells if self.legs_even(c.id, first)]
            if side == 0:
                for i in starts:
                    if not self.cell((0, i, i)).is_empty:
                        total += 1
                        yield (0, i, i)
                continue
            ends = [c.id for c in cells if self.legs_even(c.id, second)]
            strip, direction = SIDE_STRIPS[side], SIDE_DIRECTIONS[side]
            by_bucket: dict[Bucket, list[tuple[int, Fraction | None]]] = {}
            for j in ends:
                by_bucket.setdefault(self.bucket(cells[j], strip), []).append(
                    (j, cells[j].range_of(direction)[1])
                )
            pairs = 0
            for i in starts:
                t0_lo = cells[i].range_of(direction)[0]
                for j, t1_hi in by_bucket.get(self.bucket(cells[i], strip), ()):
                    if t0_lo is not None and t1_hi is not None and not t0_lo < t1_hi:
                        continue
                    pairs += 1
                    if not self.cell((side, i, j)).is_empty:
                        total += 1
                        yield (side, i, j)
            logger.debug(
                f"Side {side:+d}: {len(starts)} start cells, {len(ends)} end cells, {pairs} candidate pairs"
            )
        logger.info(f"Arrangement has {total} candidate cells")


def build_arrangement(curve: CurveGamma, scheme: PerturbationScheme | None = None) -> Arrangement3:
    return Arrangement3(curve, scheme)
