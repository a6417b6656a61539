"""Stable intersection of a (1,1)-curve Λ with the fixed curve Γ.

Λ is translated by εg for a symbolic ε > 0. Every crossing of the translated
curve with Γ is transverse; its limit point and multiplicity |det(u, w)| are
collected into the connected component of the set-theoretic intersection
Λ ∩ Γ that contains the limit point.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

import networkx as nx
from loguru import logger
from tropical_curves import Curve11Param, CurveGamma, GammaPiece, locate
from tropical_polyhedra.rational import IntVec2, Vec2, det2, dot, sub

from tritangent_classes.consts import DEFAULT_PERTURBATION, LAMBDA_DIRECTIONS, TOTAL_INTERSECTION
from tritangent_classes.exceptions import PerturbationError
from tritangent_classes.tangency.epsilon import EpsNumber
from tritangent_classes.tangency.models import (
    Atom,
    IntersectionComponent,
    PerturbationScheme,
    Piece,
    TangencyPoint,
)

LAMBDA_EDGE = "edge"

Box = tuple[Fraction | None, Fraction | None, Fraction | None, Fraction | None]


def perturbation_for(curve: CurveGamma, start: IntVec2 = DEFAULT_PERTURBATION) -> PerturbationScheme:
    """First g = (1, k), k >= start[1], parallel to no direction of Λ or Γ."""
    avoided = frozenset(curve.directions) | frozenset(LAMBDA_DIRECTIONS)
    g = start
    while any(det2(g, d) == 0 for d in avoided):
        g = (g[0], g[1] + 1)
    if g != start:
        logger.debug(f"Perturbation direction moved from {start} to {g}")
    return PerturbationScheme(g=g, avoided=avoided)


def lambda_pieces(lam: Curve11Param) -> list[Piece]:
    pieces = [Piece(leg.name, leg.start, leg.direction, None) for leg in lam.legs]
    if lam.sign != 0:
        pieces.append(Piece(LAMBDA_EDGE, lam.v0, lam.edge_direction, abs(lam.length)))
    return pieces


def _as_piece(p: GammaPiece) -> Piece:
    return Piece(p.id, p.start, p.direction, p.length)


def _box(p: Piece) -> Box:
    end = p.point_at(p.length) if p.length is not None else None
    xs, ys = [p.start[0]], [p.start[1]]
    if end is not None:
        xs.append(end[0])
        ys.append(end[1])
    x_lo, x_hi, y_lo, y_hi = min(xs), max(xs), min(ys), max(ys)
    if end is None:
        dx, dy = p.direction
        x_lo = None if dx < 0 else x_lo
        x_hi = None if dx > 0 else x_hi
        y_lo = None if dy < 0 else y_lo
        y_hi = None if dy > 0 else y_hi
    return x_lo, x_hi, y_lo, y_hi


def _boxes_meet(a: Box, b: Box) -> bool:
    for lo, hi in ((a[0], b[1]), (b[0], a[1]), (a[2], b[3]), (b[2], a[3])):
        if lo is not None and hi is not None and lo > hi:
            return False
    return True


@lru_cache(maxsize=32)
def _gamma_pieces(curve: CurveGamma) -> tuple[tuple[Piece, Box], ...]:
    return tuple((piece, _box(piece)) for piece in map(_as_piece, curve.pieces))


def _within(t: EpsNumber, length: Fraction | None) -> bool:
    if t.sign() == 0 or (length is not None and (t - EpsNumber.of(length)).sign() == 0):
        raise PerturbationError("Perturbed crossing lands on an endpoint")
    return t.sign() > 0 and (length is None or (t - EpsNumber.of(length)).sign() < 0)


def crossing(p: Piece, q: Piece, g: IntVec2) -> tuple[Vec2, int] | None:
    """Limit point and multiplicity of (p + εg) ∩ q, if they cross."""
    u, w = p.direction, q.direction
    det = det2(u, w)
    if det == 0:
        return None
    diff = sub(q.start, p.start)
    tau = EpsNumber(Fraction(det2(diff, w)), Fraction(-det2(g, w))).divide(det)
    sigma = EpsNumber(Fraction(det2(diff, u)), Fraction(-det2(g, u))).divide(det)
    if not (_within(tau, p.length) and _within(sigma, q.length)):
        return None
    return p.point_at(tau.a), abs(det)


def overlap(p: Piece, q: Piece) -> Atom | None:
    """The closed set p ∩ q as a point, segment or ray along p."""
    u, w = p.direction, q.direction
    diff = sub(q.start, p.start)
    det = det2(u, w)
    if det != 0:
        t = Fraction(det2(diff, w), det)
        s = Fraction(det2(diff, u), det)
        inside = t >= 0 and s >= 0
        inside = inside and (p.length is None or t <= p.length) and (q.length is None or s <= q.length)
        return Atom(start=p.point_at(t), lambda_piece=p.name, gamma_piece=q.name) if inside else None
    if det2(diff, u) != 0:
        return None
    t0 = Fraction(dot(diff, u), dot(u, u))
    k = 1 if dot(u, w) > 0 else -1
    if q.length is None:
        lo, hi = (t0, None) if k > 0 else (None, t0)
    else:
        lo, hi = sorted((t0, t0 + k * q.length))
    lo = Fraction(0) if lo is None else max(lo, Fraction(0))
    if p.length is not None:
        hi = p.length if hi is None else min(hi, p.length)
    if hi is not None and lo > hi:
        return None
    if hi is not None and lo == hi:
        return Atom(start=p.point_at(lo), lambda_piece=p.name, gamma_piece=q.name)
    return Atom(
        start=p.point_at(lo),
        lambda_piece=p.name,
        gamma_piece=q.name,
        direction=u,
        length=None if hi is None else hi - lo,
    )


def intersect_pieces(
    curve: CurveGamma,
    pieces: Sequence[Piece],
    scheme: PerturbationScheme,
    lambda_vertices: Mapping[str, Vec2],
) -> list[IntersectionComponent]:
    atoms: list[Atom] = []
    crossings: list[tuple[Vec2, int, str]] = []
    for p in pieces:
        box = _box(p)
        for q, q_box in _gamma_pieces(curve):
            if not _boxes_meet(box, q_box):
                continue
            atom = overlap(p, q)
            if atom is None:
                continue
            atoms.append(atom)
            hit = crossing(p, q, scheme.g)
            if hit is not None:
                crossings.append((hit[0], hit[1], p.name))

    graph = nx.Graph()
    graph.add_nodes_from(range(len(atoms)))
    for i in range(len(atoms)):
        for j in range(i + 1, len(atoms)):
            if atoms[i].meets(atoms[j]):
                graph.add_edge(i, j)
    groups = sorted(
        (tuple(atoms[i] for i in sorted(group)) for group in nx.connected_components(graph)),
        key=lambda group: min(a.start for a in group),
    )

    point_mults: list[dict[Vec2, int]] = [{} for _ in groups]
    origins: dict[Vec2, str] = {}
    for point, mult, piece_name in crossings:
        owner = next((k for k, group in enumerate(groups) if any(a.contains(point) for a in group)), None)
        if owner is None:
            raise PerturbationError(f"Limit point {point} lies outside Λ ∩ Γ")
        point_mults[owner][point] = point_mults[owner].get(point, 0) + mult
        origins.setdefault(point, piece_name)

    components = []
    for group, mults in zip(groups, point_mults):
        lam_vertices = frozenset(
            name for name, v in lambda_vertices.items() if any(a.contains(v) for a in group)
        )
        gamma_ids = {a.gamma_piece for a in group}
        endpoints = {vid for pid in gamma_ids for vid in curve.piece(pid).endpoints}
        gamma_vertices = frozenset(
            vid for vid in endpoints if any(a.contains(curve.vertex(vid).point) for a in group)
        )
        points = []
        for point in sorted(mults):
            location = next(
                (name for name, v in lambda_vertices.items() if tuple(v) == tuple(point)),
                origins[point],
            )
            points.append(
                TangencyPoint(
                    point=point,
                    local_mult=mults[point],
                    lambda_location=location,
                    gamma_stratum=locate(curve, point),
                )
            )
        components.append(
            IntersectionComponent(
                atoms=group,
                stable_mult=sum(mults.values()),
                points=tuple(points),
                lambda_vertices=lam_vertices,
                gamma_vertices=gamma_vertices,
            )
        )
    return components


def stable_intersection(
    lam: Curve11Param, curve: CurveGamma, scheme: PerturbationScheme | None = None
) -> list[IntersectionComponent]:
    """Connected components of Λ ∩ Γ with their stable multiplicities.

    Raises PerturbationError when the multiplicities do not add up to the
    intersection number of the two curves.
    """
    scheme = scheme or perturbation_for(curve)
    components = intersect_pieces(curve, lambda_pieces(lam), scheme, lam.vertices)
    total = sum(c.stable_mult for c in components)
    if total != TOTAL_INTERSECTION:
        raise PerturbationError(f"Stable intersection of {lam} with Γ has total multiplicity {total}")
    return components


def leg_is_even(
    curve: CurveGamma, base: Vec2, direction: IntVec2, scheme: PerturbationScheme
) -> bool:
    """True when every component on the open leg base + R_{>0} direction has even multiplicity.

    Components touching `base` are ignored: they depend on the rest of Λ.
    """
    leg = Piece("leg", base, direction, None)
    for component in intersect_pieces(curve, [leg], scheme, {"base": base}):
        if "base" not in component.lambda_vertices and component.stable_mult % 2:
            return False
    return True
