from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Sequence

from tropical_curves import Curve11Param, D4Element, Stratum
from tropical_polyhedra.rational import IntVec2, Vec2, det2, dot, sub


class Flavor(str, Enum):
    NONE = "n/a"
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"
    DIAGONAL = "diagonal"

    @classmethod
    def of_direction(cls, direction: IntVec2) -> "Flavor":
        dx, dy = abs(direction[0]), abs(direction[1])
        if dx == dy:
            return cls.DIAGONAL
        return cls.HORIZONTAL if dx > dy else cls.VERTICAL


@dataclass(frozen=True)
class Piece:
    """start + t*direction, 0 <= t <= length; length None for rays."""

    name: str
    start: Vec2
    direction: IntVec2
    length: Fraction | None

    def point_at(self, t: Fraction) -> Vec2:
        return (self.start[0] + t * self.direction[0], self.start[1] + t * self.direction[1])


def _param_interval(start: Vec2, direction: IntVec2, length: Fraction | None, p: Sequence[Fraction]):
    d = sub(p, start)
    if det2(d, direction) != 0:
        return None
    t = Fraction(dot(d, direction), dot(direction, direction))
    if t < 0 or (length is not None and t > length):
        return None
    return t


@dataclass(frozen=True)
class Atom:
    """A connected piece of Λ ∩ Γ coming from one Λ piece and one Γ piece.

    Points have no direction. Segments and rays run along the Λ piece.
    """

    start: Vec2
    lambda_piece: str
    gamma_piece: str
    direction: IntVec2 | None = None
    length: Fraction | None = Fraction(0)

    @property
    def is_point(self) -> bool:
        return self.direction is None

    def contains(self, p: Sequence[Fraction]) -> bool:
        if self.is_point:
            return tuple(p) == tuple(self.start)
        return _param_interval(self.start, self.direction, self.length, p) is not None

    def meets(self, other: "Atom") -> bool:
        if self.is_point:
            return other.contains(self.start)
        if other.is_point:
            return self.contains(other.start)
        u, w = self.direction, other.direction
        diff = sub(other.start, self.start)
        det = det2(u, w)
        if det != 0:
            t = Fraction(det2(diff, w), det)
            s = Fraction(det2(diff, u), det)
            return (
                t >= 0
                and s >= 0
                and (self.length is None or t <= self.length)
                and (other.length is None or s <= other.length)
            )
        if det2(diff, u) != 0:
            return False
        norm = dot(u, u)
        t0 = Fraction(dot(diff, u), norm)
        k = 1 if dot(u, w) > 0 else -1
        if other.length is None:
            lo, hi = (t0, None) if k > 0 else (None, t0)
        else:
            lo, hi = sorted((t0, t0 + k * other.length))
        if hi is not None and hi < 0:
            return False
        if lo is not None and self.length is not None and lo > self.length:
            return False
        return True


@dataclass(frozen=True)
class TangencyPoint:
    point: Vec2
    local_mult: int
    lambda_location: str
    gamma_stratum: Stratum


@dataclass(frozen=True)
class IntersectionComponent:
    atoms: tuple[Atom, ...]
    stable_mult: int
    points: tuple[TangencyPoint, ...]
    lambda_vertices: frozenset[str]
    gamma_vertices: frozenset[str]

    @property
    def dim(self) -> int:
        return 0 if all(a.is_point for a in self.atoms) else 1

    @property
    def segments(self) -> tuple[Atom, ...]:
        return tuple(a for a in self.atoms if not a.is_point)

    def contains(self, p: Sequence[Fraction]) -> bool:
        return any(a.contains(p) for a in self.atoms)


@dataclass(frozen=True)
class TangencyType:
    label: str
    flavor: Flavor
    d4_witness: D4Element
    features: tuple[int, ...]
    axis: IntVec2 | None = None
    anchor: Vec2 | None = None


@dataclass(frozen=True)
class TangencyTuple:
    member: Curve11Param
    components: tuple[IntersectionComponent, ...]
    types: tuple[TangencyType, ...]
    special: bool = False

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(sorted(c.stable_mult for c in self.components))

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(t.label for t in self.types)


@dataclass(frozen=True)
class PerturbationScheme:
    """Generic translation εg used to compute stable intersections."""

    g: IntVec2
    avoided: frozenset[IntVec2] = field(default_factory=frozenset, compare=False)
