from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from loguru import logger

from tropical_curves.consts import LATTICE_POINTS, SMOOTH_TRIANGLES
from tropical_curves.exceptions import DegenerateCurveError, NotSmoothError
from tropical_curves.models import CoeffMatrix, LatticePoint

Triangle = tuple[LatticePoint, LatticePoint, LatticePoint]


@dataclass(frozen=True)
class DualSubdivision:
    triangles: tuple[Triangle, ...]

    def edge_triangles(self) -> dict[frozenset[LatticePoint], list[int]]:
        """Map every edge of the subdivision to the triangles containing it."""
        result: dict[frozenset[LatticePoint], list[int]] = {}
        for t, tri in enumerate(self.triangles):
            for a, b in combinations(tri, 2):
                result.setdefault(frozenset((a, b)), []).append(t)
        return result


def _twice_area(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> int:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def regular_subdivision(coeffs: CoeffMatrix) -> DualSubdivision:
    """Project the upper faces of the lifted points (i, j, A_ij).

    Max convention: the cells are the upper hull facets. The subdivision must be
    a unimodular triangulation using all 16 lattice points.
    """
    cells: dict[frozenset[LatticePoint], None] = {}
    for p, q, r in combinations(LATTICE_POINTS, 3):
        det = _twice_area(p, q, r)
        if det == 0:
            continue
        hp, hq, hr = coeffs[p], coeffs[q], coeffs[r]
        # plane z = alpha*i + beta*j + gamma through the three lifted points
        alpha = Fraction((hq - hp) * (r[1] - p[1]) - (hr - hp) * (q[1] - p[1])) / det
        beta = Fraction((hr - hp) * (q[0] - p[0]) - (hq - hp) * (r[0] - p[0])) / det
        gamma = hp - alpha * p[0] - beta * p[1]
        on_plane = []
        for s in LATTICE_POINTS:
            excess = coeffs[s] - (alpha * s[0] + beta * s[1] + gamma)
            if excess > 0:
                break
            if excess == 0:
                on_plane.append(s)
        else:
            cells[frozenset(on_plane)] = None

    used = set().union(*cells) if cells else set()
    for s in LATTICE_POINTS:
        if s not in used:
            raise DegenerateCurveError(f"degenerate: lattice point {s} is not a vertex of the subdivision")

    triangles = []
    for cell in cells:
        if len(cell) != 3:
            raise NotSmoothError(f"not smooth: cell {sorted(cell)} has {len(cell)} lattice points")
        tri = tuple(sorted(cell))
        if abs(_twice_area(*tri)) != 1:
            raise NotSmoothError(f"not smooth: triangle {tri} is not unimodular")
        triangles.append(tri)

    if len(triangles) != SMOOTH_TRIANGLES:
        raise NotSmoothError(f"not smooth: {len(triangles)} triangles instead of {SMOOTH_TRIANGLES}")
    logger.debug(f"Regular subdivision is a unimodular triangulation with {len(triangles)} triangles")
    return DualSubdivision(triangles=tuple(sorted(triangles)))
