"""Planar line arrangements with exact relatively open cells.

Cells are identified by sign vectors: two edge-adjacent sides produce the same
key exactly when they bound the same 2D region. Sign evaluation runs on integer
homogeneous coordinates.
"""

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from loguru import logger

from tropical_polyhedra.exceptions import ArrangementError
from tropical_polyhedra.rational import IntVec2, RatLike, Vec2, homogenize, primitive, to_rat


@dataclass(frozen=True, order=True)
class Line2:
    """The line a*x + b*y = c with coprime integers and (a, b) > (0, 0)."""

    a: int
    b: int
    c: int

    @classmethod
    def make(cls, a: RatLike, b: RatLike, c: RatLike) -> "Line2":
        x, y, z = primitive([to_rat(a), to_rat(b), to_rat(c)])
        if (x, y) == (0, 0):
            raise ValueError("Line normal must be non-zero")
        if x < 0 or (x == 0 and y < 0):
            x, y, z = -x, -y, -z
        return cls(x, y, z)

    @classmethod
    def through(cls, normal: Sequence[RatLike], point: Vec2) -> "Line2":
        a, b = to_rat(normal[0]), to_rat(normal[1])
        return cls.make(a, b, a * point[0] + b * point[1])

    @property
    def direction(self) -> IntVec2:
        g = gcd(self.a, self.b)
        return (-self.b // g, self.a // g)

    def value(self, p: Sequence[Fraction]) -> Fraction:
        return self.a * p[0] + self.b * p[1] - self.c

    def param(self, p: Sequence[Fraction]) -> Fraction:
        d = self.direction
        return d[0] * p[0] + d[1] * p[1]


@dataclass(frozen=True)
class Constraint2:
    """a*x + b*y > c when strict, a*x + b*y = c otherwise."""

    a: int
    b: int
    c: Fraction
    strict: bool

    def holds(self, p: Sequence[Fraction], closed: bool = False) -> bool:
        v = self.a * p[0] + self.b * p[1] - self.c
        if self.strict:
            return v >= 0 if closed else v > 0
        return v == 0


@dataclass(frozen=True)
class Cell2:
    id: int
    dim: int
    point: Vec2
    constraints: tuple[Constraint2, ...]
    vertices: tuple[Vec2, ...]
    rays: tuple[IntVec2, ...]
    faces: tuple[int, ...]

    def contains(self, p: Sequence[Fraction], closed: bool = False) -> bool:
        return all(c.holds(p, closed=closed) for c in self.constraints)

    def range_of(self, w: Sequence[int]) -> tuple[Fraction | None, Fraction | None]:
        """Closed range of the functional w over the cell; None marks infinity."""
        values = [w[0] * v[0] + w[1] * v[1] for v in self.vertices]
        lo, hi = min(values), max(values)
        for r in self.rays:
            s = w[0] * r[0] + w[1] * r[1]
            if s > 0:
                hi = None
            elif s < 0:
                lo = None
        return lo, hi


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


class LineArrangement:
    """All relatively open vertices, edges and regions cut out by a set of lines.

    Cell ids run over vertices first, then edges, then 2D regions.
    """

    def __init__(self, lines: Iterable[Line2]):
        self.lines: tuple[Line2, ...] = tuple(sorted(set(lines)))
        self.cells: list[Cell2] = []
        self._build()
        logger.debug(
            f"Arrangement of {len(self.lines)} lines: "
            f"{len(self.vertices)} vertices, {len(self.edges)} edges, {len(self.regions)} regions"
        )

    @property
    def vertices(self) -> list[Cell2]:
        return [c for c in self.cells if c.dim == 0]

    @property
    def edges(self) -> list[Cell2]:
        return [c for c in self.cells if c.dim == 1]

    @property
    def regions(self) -> list[Cell2]:
        return [c for c in self.cells if c.dim == 2]

    def locate(self, p: Sequence[Fraction]) -> Cell2:
        for cell in self.cells:
            if cell.contains(p):
                return cell
        raise ArrangementError(f"Point {p} lies in no cell")

    def _build(self) -> None:
        lines = self.lines
        if len(lines) < 2:
            raise ArrangementError("An arrangement needs at least two lines")

        on_line: dict[int, set[Vec2]] = defaultdict(set)
        through: dict[Vec2, set[int]] = defaultdict(set)
        for i, j in combinations(range(len(lines)), 2):
            li, lj = lines[i], lines[j]
            det = li.a * lj.b - lj.a * li.b
            if det == 0:
                continue
            p = (Fraction(li.c * lj.b - lj.c * li.b, det), Fraction(li.a * lj.c - lj.a * li.c, det))
            through[p].update((i, j))
            on_line[i].add(p)
            on_line[j].add(p)

        vertex_id: dict[Vec2, int] = {}
        for p in sorted(through):
            first, second = sorted(through[p])[:2]
            cid = len(self.cells)
            vertex_id[p] = cid
            self.cells.append(
                Cell2(
                    id=cid,
                    dim=0,
                    point=p,
                    constraints=(_equation(lines[first]), _equation(lines[second])),
                    vertices=(p,),
                    rays=(),
                    faces=(),
                )
            )

        # (edge id, line index, interior point)
        edge_points: list[tuple[int, int, Vec2]] = []
        for k, line in enumerate(lines):
            points = sorted(on_line.get(k, ()), key=line.param)
            if not points:
                raise ArrangementError(f"Line {line} is parallel to every other line")
            d = line.direction
            pieces: list[tuple[Vec2 | None, Vec2 | None]] = [(None, points[0])]
            pieces += list(zip(points, points[1:]))
            pieces.append((points[-1], None))
            for start, end in pieces:
                constraints = [_equation(line)]
                vertices, rays, faces = [], [], []
                if start is not None:
                    constraints.append(Constraint2(d[0], d[1], line.param(start), True))
                    vertices.append(start)
                    faces.append(vertex_id[start])
                else:
                    rays.append((-d[0], -d[1]))
                if end is not None:
                    constraints.append(Constraint2(-d[0], -d[1], -line.param(end), True))
                    vertices.append(end)
                    faces.append(vertex_id[end])
                else:
                    rays.append(d)
                if start is not None and end is not None:
                    point = ((start[0] + end[0]) / 2, (start[1] + end[1]) / 2)
                elif start is not None:
                    point = (start[0] + d[0], start[1] + d[1])
                else:
                    point = (end[0] - d[0], end[1] - d[1])
                cid = len(self.cells)
                self.cells.append(
                    Cell2(
                        id=cid,
                        dim=1,
                        point=point,
                        constraints=tuple(constraints),
                        vertices=tuple(vertices),
                        rays=tuple(rays),
                        faces=tuple(faces),
                    )
                )
                edge_points.append((cid, k, point))

        sides: dict[bytes, list[tuple[int, int, int]]] = defaultdict(list)
        for cid, k, point in edge_points:
            (x, y), w = homogenize(point)
            signs = bytearray(_sign(ln.a * x + ln.b * y - ln.c * w) + 1 for ln in lines)
            for side in (1, -1):
                signs[k] = side + 1
                sides[bytes(signs)].append((cid, k, side))

        for key in sorted(sides):
            bounding = sides[key]
            constraints: dict[int, Constraint2] = {}
            vertices: dict[Vec2, None] = {}
            rays: dict[IntVec2, None] = {}
            faces: dict[int, None] = {}
            sx = sy = Fraction(0)
            for cid, k, side in bounding:
                line = lines[k]
                constraints[k] = Constraint2(side * line.a, side * line.b, Fraction(side * line.c), True)
                edge = self.cells[cid]
                faces[cid] = None
                for f in edge.faces:
                    faces[f] = None
                for v in edge.vertices:
                    vertices[v] = None
                for r in edge.rays:
                    rays[r] = None
                sx += edge.point[0]
                sy += edge.point[1]
            n = len(bounding)
            cid = len(self.cells)
            self.cells.append(
                Cell2(
                    id=cid,
                    dim=2,
                    point=(sx / n, sy / n),
                    constraints=tuple(constraints[k] for k in sorted(constraints)),
                    vertices=tuple(sorted(vertices)),
                    rays=tuple(sorted(rays)),
                    faces=tuple(sorted(faces)),
                )
            )


def _equation(line: Line2) -> Constraint2:
    return Constraint2(line.a, line.b, Fraction(line.c), False)
