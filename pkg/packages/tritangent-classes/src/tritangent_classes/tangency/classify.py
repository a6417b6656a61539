"""Feature keys of tangency components and their catalog labels."""

from dataclasses import dataclass

from tropical_curves import Curve11Param, CurveGamma, PieceKind, StratumKind, canonical_element, locate
from tropical_polyhedra.rational import IntVec2, Vec2

from tritangent_classes.exceptions import UnclassifiableTangencyError
from tritangent_classes.tangency.catalog import CatalogRow, lookup
from tritangent_classes.tangency.intersection import LAMBDA_EDGE
from tritangent_classes.tangency.models import Atom, Flavor, IntersectionComponent, TangencyType

# codes of the E feature for an overlap along the edge of Λ
_EDGE_ENDS = {"aa": 1, "ac": 2, "cc": 3, "bb": 5}
_LEG_ON_LEG, _LEG_ON_EDGE, _EDGE_ON_PIECE = 1, 2, 3


@dataclass(frozen=True)
class ComponentFeatures:
    valency: int
    dim: int
    mult: int
    lambda_vertices: int
    lambda_vertices_on_gamma_vertices: int
    has_gamma_vertex: int
    segments: int
    carrier: int
    ends: int
    collinear: int

    @property
    def key(self) -> tuple[int, ...]:
        return (
            self.valency,
            self.dim,
            self.mult,
            self.lambda_vertices,
            self.lambda_vertices_on_gamma_vertices,
            self.has_gamma_vertex,
            self.segments,
            self.carrier,
            self.ends,
            self.collinear,
        )


def _neg(v: IntVec2) -> IntVec2:
    return (-v[0], -v[1])


def _gamma_vertex_at(curve: CurveGamma, p: Vec2) -> str | None:
    stratum = locate(curve, p)
    return stratum.ref if stratum.kind == StratumKind.VERTEX else None


def lambda_rays(lam: Curve11Param, base: str) -> list[IntVec2]:
    """Outgoing primitive directions of Λ at one of its vertices."""
    rays = [leg.direction for leg in lam.legs if leg.base == base]
    if lam.edge_direction is not None:
        rays.append(lam.edge_direction if base == "v0" else _neg(lam.edge_direction))
    return rays


def collinear_pairs(curve: CurveGamma, lam: Curve11Param, base: str) -> list[IntVec2]:
    """Rays u of Λ at `base` whose opposite -u is a ray of Γ at the same point."""
    qid = _gamma_vertex_at(curve, lam.vertices[base])
    if qid is None:
        return []
    gamma_rays = {d for d, _ in curve.rays_at(qid)}
    return [u for u in lambda_rays(lam, base) if _neg(u) in gamma_rays]


def _segment_pieces(component: IntersectionComponent) -> list[str]:
    return sorted({a.lambda_piece for a in component.segments})


def _edge_letter(curve: CurveGamma, component: IntersectionComponent, p: Vec2) -> str:
    if not component.contains(p):
        return "c"
    return "b" if _gamma_vertex_at(curve, p) is not None else "a"


def component_features(
    component: IntersectionComponent, lam: Curve11Param, curve: CurveGamma
) -> ComponentFeatures:
    on_vertices = [
        name for name in sorted(component.lambda_vertices) if _gamma_vertex_at(curve, lam.vertices[name])
    ]
    pieces = _segment_pieces(component)
    carrier = ends = collinear = 0
    if len(pieces) == 1:
        (piece,) = pieces
        segment = next(a for a in component.segments if a.lambda_piece == piece)
        if piece == LAMBDA_EDGE:
            carrier = _EDGE_ON_PIECE
            letters = "".join(sorted(_edge_letter(curve, component, v) for v in (lam.v0, lam.v1)))
            ends = 4 if letters.count("b") == 1 else _EDGE_ENDS[letters]
        else:
            carrier = _LEG_ON_LEG if curve.piece(segment.gamma_piece).kind == PieceKind.LEG else _LEG_ON_EDGE
            base = lam.leg(piece).start
            if not component.contains(base):
                ends = 3
            else:
                ends = 2 if _gamma_vertex_at(curve, base) is not None else 1
    if component.dim == 0 and len(component.lambda_vertices) == 1 and on_vertices:
        collinear = int(bool(collinear_pairs(curve, lam, on_vertices[0])))
    return ComponentFeatures(
        valency=lam.valency,
        dim=component.dim,
        mult=component.stable_mult,
        lambda_vertices=len(component.lambda_vertices),
        lambda_vertices_on_gamma_vertices=len(on_vertices),
        has_gamma_vertex=int(bool(component.gamma_vertices)),
        segments=min(len(pieces), 2),
        carrier=carrier,
        ends=ends,
        collinear=collinear,
    )


def _anchor(component: IntersectionComponent, lam: Curve11Param, curve: CurveGamma) -> Vec2:
    names = sorted(component.lambda_vertices)
    for name in names:
        if _gamma_vertex_at(curve, lam.vertices[name]) is not None:
            return lam.vertices[name]
    if names:
        return lam.vertices[names[0]]
    return component.points[0].point if component.points else component.atoms[0].start


def _gamma_direction(curve: CurveGamma, p: Vec2) -> IntVec2 | None:
    stratum = locate(curve, p)
    if stratum.kind in (StratumKind.EDGE, StratumKind.LEG):
        return curve.piece(stratum.ref).direction
    return None


def _prefer_axis(directions: list[IntVec2]) -> IntVec2 | None:
    if not directions:
        return None
    straight = [d for d in directions if Flavor.of_direction(d) != Flavor.DIAGONAL]
    return (straight or directions)[0]


def _first_diagonal_ray(curve: CurveGamma, p: Vec2) -> IntVec2 | None:
    qid = _gamma_vertex_at(curve, p)
    if qid is None:
        return None
    return next((d for d, _ in sorted(curve.rays_at(qid)) if abs(d[0]) == abs(d[1])), None)


def _segment(component: IntersectionComponent) -> Atom | None:
    return component.segments[0] if component.segments else None


def classify(component: IntersectionComponent, lam: Curve11Param, curve: CurveGamma) -> TangencyType:
    """Label of an even-multiplicity component with its flavor and witness."""
    features = component_features(component, lam, curve)
    row: CatalogRow | None = lookup(features.key)
    if row is None:
        raise UnclassifiableTangencyError(f"unclassifiable: features {features.key} at {component.atoms[0].start}")

    anchor = _anchor(component, lam, curve)
    axis: IntVec2 | None = None
    if row.flavor_rule == "gamma":
        axis = _gamma_direction(curve, anchor)
    elif row.flavor_rule == "overlap":
        segment = _segment(component)
        axis = segment.direction if segment is not None else None
    elif row.flavor_rule == "collinear":
        names = sorted(component.lambda_vertices)
        axis = _prefer_axis(collinear_pairs(curve, lam, names[0])) if names else None
    if row.label == "(6a')":
        axis = _first_diagonal_ray(curve, anchor)

    flavor = Flavor.of_direction(axis) if axis is not None and row.flavor_rule != "-" else Flavor.NONE
    principal = axis
    if principal is None and component.segments:
        principal = component.segments[0].direction
    return TangencyType(
        label=row.label,
        flavor=flavor,
        d4_witness=canonical_element(principal),
        features=features.key,
        axis=axis,
        anchor=anchor,
    )
