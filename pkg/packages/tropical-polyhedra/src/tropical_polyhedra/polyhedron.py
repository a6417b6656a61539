from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from typing import Iterable, Sequence

from tropical_polyhedra.exceptions import EmptyCellError
from tropical_polyhedra.rational import (
    IntVec3,
    RatLike,
    Vec3,
    add,
    cross3,
    dot,
    nullspace,
    primitive,
    rank,
    sub,
    to_rat,
)


@dataclass(frozen=True)
class HalfSpace3:
    """The set {p : normal . p >= offset}, or > offset when `strict`.

    Normals are stored as primitive integer vectors, so two descriptions of the
    same half-space compare equal.
    """

    normal: IntVec3
    offset: Fraction
    strict: bool = False

    @classmethod
    def make(
        cls, normal: Sequence[RatLike], offset: RatLike, strict: bool = False
    ) -> "HalfSpace3":
        n = [to_rat(x) for x in normal]
        if len(n) != 3:
            raise ValueError(f"Expected a 3-vector normal, got {normal!r}")
        if not any(n):
            raise ValueError("Half-space normal must be non-zero")
        denominator = lcm(*(x.denominator for x in n))
        ints = [int(x * denominator) for x in n]
        g = gcd(*ints)
        factor = Fraction(denominator, g)
        return cls(
            normal=tuple(x // g for x in ints),
            offset=to_rat(offset) * factor,
            strict=strict,
        )

    def value(self, p: Sequence[Fraction]) -> Fraction:
        return dot(self.normal, p) - self.offset

    def contains(self, p: Sequence[Fraction], closed: bool = False) -> bool:
        v = self.value(p)
        if self.strict and not closed:
            return v > 0
        return v >= 0

    def opposite(self) -> "HalfSpace3":
        return HalfSpace3(
            normal=tuple(-x for x in self.normal),
            offset=-self.offset,
            strict=self.strict,
        )

    def closed(self) -> "HalfSpace3":
        return HalfSpace3(self.normal, self.offset, strict=False)

    def int_row(self) -> tuple[int, int, int, int]:
        """Integer row (a, b, c, d) meaning a*x + b*y + c*z >= d."""
        q = self.offset.denominator
        return (
            self.normal[0] * q,
            self.normal[1] * q,
            self.normal[2] * q,
            self.offset.numerator,
        )


def equality(normal: Sequence[RatLike], offset: RatLike) -> tuple[HalfSpace3, HalfSpace3]:
    """The hyperplane normal . p = offset as a pair of closed half-spaces."""
    h = HalfSpace3.make(normal, offset)
    return h, h.opposite()


@dataclass(frozen=True)
class Polyhedron3:
    """A relatively open polyhedron in Q^3.

    `halfspaces` is the H-representation of the set itself. `vertices` and
    `rays` describe its closure; a lineality direction d appears as both d
    and -d. Empty polyhedra have `dim == -1` and no vertices.
    """

    halfspaces: tuple[HalfSpace3, ...]
    vertices: tuple[Vec3, ...]
    rays: tuple[IntVec3, ...]
    dim: int
    _interior: Vec3 | None = field(default=None, compare=False, repr=False)

    @property
    def is_empty(self) -> bool:
        return self.dim < 0

    @property
    def is_bounded(self) -> bool:
        return not self.rays

    def contains(self, p: Sequence[Fraction], closed: bool = False) -> bool:
        return all(h.contains(p, closed=closed) for h in self.halfspaces)


def _cramer(rows: Sequence[tuple[int, int, int, int]]) -> tuple[int, int, int, int] | None:
    """Solve three tight rows; returns homogeneous (X, Y, Z, D) with D > 0."""
    (a1, b1, c1, d1), (a2, b2, c2, d2), (a3, b3, c3, d3) = rows
    det = a1 * (b2 * c3 - b3 * c2) - b1 * (a2 * c3 - a3 * c2) + c1 * (a2 * b3 - a3 * b2)
    if det == 0:
        return None
    x = d1 * (b2 * c3 - b3 * c2) - b1 * (d2 * c3 - d3 * c2) + c1 * (d2 * b3 - d3 * b2)
    y = a1 * (d2 * c3 - d3 * c2) - d1 * (a2 * c3 - a3 * c2) + c1 * (a2 * d3 - a3 * d2)
    z = a1 * (b2 * d3 - b3 * d2) - b1 * (a2 * d3 - a3 * d2) + d1 * (a2 * b3 - a3 * b2)
    if det < 0:
        return -x, -y, -z, -det
    return x, y, z, det


def _vertices(rows: Sequence[tuple[int, int, int, int]]) -> list[Vec3]:
    found: dict[Vec3, None] = {}
    for triple in combinations(range(len(rows)), 3):
        solution = _cramer([rows[i] for i in triple])
        if solution is None:
            continue
        x, y, z, w = solution
        if all(a * x + b * y + c * z >= d * w for a, b, c, d in rows):
            found[(Fraction(x, w), Fraction(y, w), Fraction(z, w))] = None
    return sorted(found)


def _rays(normals: Sequence[tuple[int, int, int]]) -> list[IntVec3]:
    """Extreme rays of the pointed cone {r : n . r >= 0 for every n}."""
    found: dict[IntVec3, None] = {}
    for i, j in combinations(range(len(normals)), 2):
        r = cross3(normals[i], normals[j])
        if not any(r):
            continue
        for candidate in (r, tuple(-x for x in r)):
            if all(dot(n, candidate) >= 0 for n in normals):
                found[primitive(candidate)] = None
    return sorted(found)


def make_polyhedron(halfspaces: Iterable[HalfSpace3]) -> Polyhedron3:
    """Build the V-representation of a relatively open polyhedron.

    Vertices come from tight triples of closed constraints, solved with
    integer Cramer's rule. Lineality directions are split off as +/- rays so
    the remaining part is pointed. The set is empty when the closure has no
    vertex, or when a strict constraint fails at the closure's interior point.
    """
    hs = tuple(dict.fromkeys(halfspaces))
    rows = [h.int_row() for h in hs]
    normals = [r[:3] for r in rows]

    lineality = nullspace(normals, 3) if normals else [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    for d in lineality:
        rows.append((*d, 0))
        rows.append((-d[0], -d[1], -d[2], 0))
    cone_normals = [r[:3] for r in rows]

    vertices = _vertices(rows)
    if not vertices:
        return Polyhedron3(halfspaces=hs, vertices=(), rays=(), dim=-1)

    rays = _rays(cone_normals)
    for d in lineality:
        rays.extend([d, tuple(-x for x in d)])
    rays = sorted(set(rays))

    spanning = [sub(v, vertices[0]) for v in vertices[1:]] + [list(r) for r in rays]
    dim = rank(spanning) if spanning else 0

    interior = _interior(vertices, rays)
    if any(h.strict and h.value(interior) <= 0 for h in hs):
        return Polyhedron3(halfspaces=hs, vertices=(), rays=(), dim=-1)
    return Polyhedron3(
        halfspaces=hs,
        vertices=tuple(vertices),
        rays=tuple(rays),
        dim=dim,
        _interior=interior,
    )


def _interior(vertices: Sequence[Vec3], rays: Sequence[IntVec3]) -> Vec3:
    n = len(vertices)
    centroid = tuple(sum(v[k] for v in vertices) / n for k in range(3))
    for r in rays:
        centroid = add(centroid, r)
    return centroid


def interior_point(p: Polyhedron3) -> Vec3:
    """Barycenter of the vertices plus the sum of the rays.

    The result lies in the relative interior and depends only on the
    V-representation.
    """
    if p.is_empty:
        raise EmptyCellError()
    if p._interior is not None:
        return p._interior
    return _interior(p.vertices, p.rays)
