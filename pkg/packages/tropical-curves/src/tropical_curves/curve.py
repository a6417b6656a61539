from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from loguru import logger
from tropical_polyhedra.rational import IntVec2, Vec2, det2, primitive, sub

from tropical_curves.consts import (
    AXIS_DIRECTIONS,
    LATTICE_POINTS,
    LEGS_PER_DIRECTION,
    SMOOTH_BOUNDED_EDGES,
    SMOOTH_VERTICES,
)
from tropical_curves.exceptions import CurveError, DegenerateCurveError
from tropical_curves.models import CoeffMatrix, LatticePoint
from tropical_curves.subdivision import DualSubdivision, Triangle, regular_subdivision


class PieceKind(str, Enum):
    EDGE = "edge"
    LEG = "leg"


class StratumKind(str, Enum):
    CHAMBER = "chamber"
    EDGE = "edge"
    LEG = "leg"
    VERTEX = "vertex"


@dataclass(frozen=True)
class GammaVertex:
    id: str
    point: Vec2
    triangle: Triangle


@dataclass(frozen=True)
class GammaPiece:
    """A bounded edge or a leg: start + t*direction for 0 <= t <= length.

    `length` is None for legs. `direction` is primitive, so t measures lattice
    length. `dual` is the edge of the subdivision the piece is orthogonal to.
    """

    id: str
    kind: PieceKind
    start: Vec2
    direction: IntVec2
    length: Fraction | None
    dual: frozenset[LatticePoint]
    endpoints: tuple[str, ...]

    @property
    def end(self) -> Vec2 | None:
        if self.length is None:
            return None
        return self.point_at(self.length)

    def point_at(self, t: Fraction) -> Vec2:
        return (self.start[0] + t * self.direction[0], self.start[1] + t * self.direction[1])


@dataclass(frozen=True)
class Stratum:
    """Where a point sits relative to Γ; `dual` is its dual cell v^∨."""

    kind: StratumKind
    ref: str
    dual: frozenset[LatticePoint]


@dataclass(frozen=True, eq=False)
class CurveGamma:
    coefficients: CoeffMatrix
    subdivision: DualSubdivision
    vertices: tuple[GammaVertex, ...]
    edges: tuple[GammaPiece, ...]
    legs: tuple[GammaPiece, ...]

    @property
    def pieces(self) -> tuple[GammaPiece, ...]:
        return self.edges + self.legs

    @cached_property
    def _by_id(self) -> dict:
        lookup = {v.id: v for v in self.vertices}
        lookup.update({p.id: p for p in self.pieces})
        return lookup

    @cached_property
    def _by_dual(self) -> dict[frozenset[LatticePoint], GammaPiece | GammaVertex]:
        lookup: dict = {p.dual: p for p in self.pieces}
        lookup.update({frozenset(v.triangle): v for v in self.vertices})
        return lookup

    def vertex(self, vertex_id: str) -> GammaVertex:
        return self._by_id[vertex_id]

    def piece(self, piece_id: str) -> GammaPiece:
        return self._by_id[piece_id]

    @cached_property
    def directions(self) -> frozenset[IntVec2]:
        """Primitive directions of all edges and legs, up to sign."""
        found = set()
        for p in self.pieces:
            found.add(p.direction)
            found.add((-p.direction[0], -p.direction[1]))
        return frozenset(found)

    def rays_at(self, vertex_id: str) -> list[tuple[IntVec2, GammaPiece]]:
        """Outgoing primitive directions at a vertex with their pieces."""
        rays = []
        for p in self.pieces:
            if p.endpoints[0] == vertex_id:
                rays.append((p.direction, p))
            elif len(p.endpoints) > 1 and p.endpoints[1] == vertex_id:
                rays.append(((-p.direction[0], -p.direction[1]), p))
        return rays

    def maximizers(self, p: Sequence[Fraction]) -> frozenset[LatticePoint]:
        values = {s: self.coefficients[s] + s[0] * p[0] + s[1] * p[1] for s in LATTICE_POINTS}
        top = max(values.values())
        return frozenset(s for s, v in values.items() if v == top)


def _vertex_point(coeffs: CoeffMatrix, tri: Triangle) -> Vec2:
    p, q, r = tri
    u, v = sub(q, p), sub(r, p)
    bu = coeffs[p] - coeffs[q]
    bv = coeffs[p] - coeffs[r]
    det = det2(u, v)
    return (Fraction(bu * v[1] - u[1] * bv) / det, Fraction(u[0] * bv - bu * v[0]) / det)


def _perpendicular(a: LatticePoint, b: LatticePoint) -> IntVec2:
    return primitive((a[1] - b[1], b[0] - a[0]))


def check_counts(vertices: Sequence[GammaVertex], edges: Sequence[GammaPiece], legs: Sequence[GammaPiece]) -> None:
    """Combinatorics every smooth (3,3)-curve shares; CurveError otherwise."""
    if len(vertices) != SMOOTH_VERTICES or len(edges) != SMOOTH_BOUNDED_EDGES:
        raise CurveError(
            f"smooth curve with {len(vertices)} vertices and {len(edges)} bounded edges, "
            f"expected {SMOOTH_VERTICES} and {SMOOTH_BOUNDED_EDGES}"
        )
    per_direction = Counter(leg.direction for leg in legs)
    if per_direction != Counter({d: LEGS_PER_DIRECTION for d in AXIS_DIRECTIONS}):
        raise CurveError(f"legs per direction {dict(per_direction)}, expected {LEGS_PER_DIRECTION} each")


def build_curve(coeffs: CoeffMatrix) -> CurveGamma:
    """Tropical curve of a coefficient matrix under the max convention.

    Raises NotSmoothError (or DegenerateCurveError) unless the regular
    subdivision is a unimodular triangulation of the whole square.
    """
    subdivision = regular_subdivision(coeffs)
    corners = sorted(
        (_vertex_point(coeffs, tri), tri) for tri in subdivision.triangles
    )
    vertices = tuple(
        GammaVertex(id=f"q{k}", point=point, triangle=tri) for k, (point, tri) in enumerate(corners)
    )
    by_triangle = {v.triangle: v for v in vertices}

    edges_raw, legs_raw = [], []
    for dual, owners in subdivision.edge_triangles().items():
        a, b = sorted(dual)
        if len(owners) == 2:
            v1, v2 = sorted((by_triangle[subdivision.triangles[t]] for t in owners), key=lambda v: v.id)
            delta = sub(v2.point, v1.point)
            if not any(delta):
                raise DegenerateCurveError(f"degenerate: vertices {v1.id} and {v2.id} coincide")
            direction = primitive(delta)
            k = 0 if direction[0] else 1
            edges_raw.append((v1.point, v2.point, direction, delta[k] / direction[k], dual, (v1.id, v2.id)))
        else:
            tri = subdivision.triangles[owners[0]]
            (third,) = set(tri) - dual
            u = _perpendicular(a, b)
            if u[0] * (third[0] - a[0]) + u[1] * (third[1] - a[1]) > 0:
                u = (-u[0], -u[1])
            vertex = by_triangle[tri]
            legs_raw.append((u, vertex.point, dual, vertex.id))

    edges = tuple(
        GammaPiece(
            id=f"e{k}",
            kind=PieceKind.EDGE,
            start=start,
            direction=direction,
            length=length,
            dual=dual,
            endpoints=ends,
        )
        for k, (start, _, direction, length, dual, ends) in enumerate(sorted(edges_raw, key=lambda e: e[:2]))
    )
    legs = tuple(
        GammaPiece(
            id=f"l{k}",
            kind=PieceKind.LEG,
            start=start,
            direction=u,
            length=None,
            dual=dual,
            endpoints=(vid,),
        )
        for k, (u, start, dual, vid) in enumerate(sorted(legs_raw, key=lambda leg: leg[:2]))
    )
    logger.debug(f"Built curve with {len(vertices)} vertices, {len(edges)} edges, {len(legs)} legs")
    check_counts(vertices, edges, legs)
    return CurveGamma(
        coefficients=coeffs,
        subdivision=subdivision,
        vertices=vertices,
        edges=edges,
        legs=legs,
    )


def locate(curve: CurveGamma, p: Sequence[Fraction]) -> Stratum:
    """Stratum of Γ containing p, read off from the maximizing monomials."""
    top = curve.maximizers(p)
    if len(top) == 1:
        (s,) = top
        return Stratum(kind=StratumKind.CHAMBER, ref=f"c{s[0]}{s[1]}", dual=top)
    owner = curve._by_dual.get(top)
    if owner is None:
        raise CurveError(f"Point {p} has maximizers {sorted(top)} that form no cell")
    if isinstance(owner, GammaVertex):
        return Stratum(kind=StratumKind.VERTEX, ref=owner.id, dual=top)
    kind = StratumKind.EDGE if owner.kind == PieceKind.EDGE else StratumKind.LEG
    return Stratum(kind=kind, ref=owner.id, dual=top)
