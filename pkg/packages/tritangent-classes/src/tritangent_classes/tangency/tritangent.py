from loguru import logger
from tropical_curves import Curve11Param, CurveGamma
from tropical_polyhedra.rational import dot, sub

from tritangent_classes.consts import TRITANGENT_PATTERNS
from tritangent_classes.exceptions import MuUndefinedError
from tritangent_classes.tangency.classify import classify
from tritangent_classes.tangency.intersection import LAMBDA_EDGE, stable_intersection
from tritangent_classes.tangency.models import (
    Flavor,
    IntersectionComponent,
    PerturbationScheme,
    TangencyTuple,
)

MU_LABELS = frozenset({"(4a)", "(6a)", "(4a')", "(6a')"})
# labels whose lifting multiplicity is μ only for the diagonal flavor
DIAGONAL_ONLY = frozenset({"(4a)", "(6a)"})


def tangency_components(components: list[IntersectionComponent]) -> list[IntersectionComponent]:
    return [c for c in components if c.stable_mult > 0]


def is_special(components: tuple[IntersectionComponent, ...], lam: Curve11Param) -> bool:
    """Two tangency components lying on one and the same leg of Λ."""
    vertex_points = {tuple(v) for v in lam.vertices.values()}
    carriers = []
    for component in components:
        pieces = {a.lambda_piece for a in component.atoms if tuple(a.start) not in vertex_points or not a.is_point}
        carriers.append(next(iter(pieces)) if len(pieces) == 1 else None)
    for i in range(len(carriers)):
        for j in range(i + 1, len(carriers)):
            if carriers[i] is not None and carriers[i] == carriers[j] and carriers[i] != LAMBDA_EDGE:
                return True
    return False


def is_tritangent(
    lam: Curve11Param, curve: CurveGamma, scheme: PerturbationScheme | None = None
) -> TangencyTuple | None:
    """The tangency tuple of Λ when its components have multiplicities 2+2+2, 2+4 or 6."""
    components = tuple(tangency_components(stable_intersection(lam, curve, scheme)))
    pattern = tuple(sorted(c.stable_mult for c in components))
    if pattern not in TRITANGENT_PATTERNS:
        return None
    types = tuple(classify(c, lam, curve) for c in components)
    return TangencyTuple(
        member=lam,
        components=components,
        types=types,
        special=is_special(components, lam),
    )


def compute_mu(t: TangencyTuple, idx: int) -> int:
    """Half-plane count for a tangency at a point of Γ of slope ±1.

    The line through the anchor P spanned by the diagonal direction splits the
    plane; the tangency points of the other components are weighted by their
    local multiplicities and counted in both closed halves. μ is 2 when one
    half holds more than half of the weight, else 1.
    """
    kind = t.types[idx]
    if kind.label not in MU_LABELS or kind.axis is None or kind.anchor is None:
        raise MuUndefinedError(kind.label)
    if kind.label in DIAGONAL_ONLY and kind.flavor != Flavor.DIAGONAL:
        raise MuUndefinedError(f"{kind.label} {kind.flavor.value}")

    normal = (-kind.axis[1], kind.axis[0])
    plus = minus = total = 0
    for j, component in enumerate(t.components):
        if j == idx:
            continue
        for point in component.points:
            side = dot(normal, sub(point.point, kind.anchor))
            total += point.local_mult
            if side >= 0:
                plus += point.local_mult
            if side <= 0:
                minus += point.local_mult
    mu = 2 if 2 * max(plus, minus) > total else 1
    logger.trace(f"mu for {kind.label} at {kind.anchor}: +{plus} -{minus} of {total} -> {mu}")
    return mu
