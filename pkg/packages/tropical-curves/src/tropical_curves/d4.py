from dataclasses import dataclass
from itertools import product

from tropical_polyhedra.rational import IntVec2

from tropical_curves.consts import DEGREE
from tropical_curves.curve import CurveGamma, build_curve
from tropical_curves.models import CoeffMatrix, LatticePoint

Matrix2 = tuple[tuple[int, int], tuple[int, int]]

_ROTATION: Matrix2 = ((0, -1), (1, 0))
_REFLECTION: Matrix2 = ((1, 0), (0, -1))


def _matmul(a: Matrix2, b: Matrix2) -> Matrix2:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)) for i in range(2)
    )


@dataclass(frozen=True)
class D4Element:
    """Symmetry rot^r * ref^f of the square [0,3]^2.

    On R^2 the element acts linearly by its signed permutation matrix; on the
    lattice square it acts by the affine map with the same linear part that
    fixes the square.
    """

    rot: int = 0
    ref: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "rot", self.rot % 4)
        object.__setattr__(self, "ref", self.ref % 2)

    def __repr__(self) -> str:
        return f"D4Element(rot={self.rot}, ref={self.ref})"

    @classmethod
    def full_group(cls) -> list["D4Element"]:
        return [cls(r, f) for f, r in product((0, 1), range(4))]

    @property
    def matrix(self) -> Matrix2:
        m: Matrix2 = ((1, 0), (0, 1))
        for _ in range(self.rot):
            m = _matmul(m, _ROTATION)
        if self.ref:
            m = _matmul(m, _REFLECTION)
        return m

    @property
    def inverse(self) -> "D4Element":
        if self.ref:
            return self
        return D4Element(-self.rot, 0)

    def __mul__(self, other: "D4Element") -> "D4Element":
        rot = self.rot - other.rot if self.ref else self.rot + other.rot
        return D4Element(rot, self.ref + other.ref)

    def apply(self, v):
        m = self.matrix
        return (m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1])

    def apply_lattice(self, p: LatticePoint) -> LatticePoint:
        x, y = self.apply(p)
        m = self.matrix
        if -1 in m[0]:
            x += DEGREE
        if -1 in m[1]:
            y += DEGREE
        return x, y

    def canonicalizes(self, direction: IntVec2) -> bool:
        """True when the image of `direction` lies in the sector x >= y >= 0."""
        x, y = self.apply(direction)
        return x >= y >= 0


def transform_coefficients(coeffs: CoeffMatrix, g: D4Element) -> CoeffMatrix:
    """A'_{g(p)} = A_p."""
    table = [[coeffs[(i, j)] for j in range(DEGREE + 1)] for i in range(DEGREE + 1)]
    for p, a in coeffs.items():
        i, j = g.apply_lattice(p)
        table[i][j] = a
    return CoeffMatrix(coefficients=table)


def d4_apply(g: D4Element, curve: CurveGamma) -> CurveGamma:
    """Curve of the transformed coefficients; its support is g applied to Γ."""
    return build_curve(transform_coefficients(curve.coefficients, g))


def canonical_element(direction: IntVec2 | None) -> D4Element:
    """First group element moving `direction` into the sector x >= y >= 0."""
    if direction is None:
        return D4Element()
    return next(g for g in D4Element.full_group() if g.canonicalizes(direction))
