"""Tropical curves of bidegree (1,1) and their Segre coordinates."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from tropical_polyhedra.rational import IntVec2, RatLike, Vec2, to_rat

COMPASS: dict[str, IntVec2] = {"E": (1, 0), "N": (0, 1), "W": (-1, 0), "S": (0, -1)}

VERTEX_LEGS: dict[tuple[int, str], tuple[str, ...]] = {
    (1, "v0"): ("W", "S"),
    (1, "v1"): ("E", "N"),
    (-1, "v0"): ("E", "S"),
    (-1, "v1"): ("W", "N"),
    (0, "v0"): ("E", "N", "W", "S"),
}


@dataclass(frozen=True)
class Curve11Leg:
    name: str
    base: str
    start: Vec2
    direction: IntVec2


@dataclass(frozen=True)
class Curve11Param:
    """A (1,1)-curve Λ given by its vertex v0 and signed edge length ℓ.

    ℓ > 0: v1 = v0 + ℓ(1,1). ℓ < 0: v1 = v0 - ℓ(-1,1). ℓ = 0: one 4-valent vertex.
    """

    v0: Vec2
    length: Fraction

    @classmethod
    def make(cls, x: RatLike, y: RatLike, length: RatLike) -> "Curve11Param":
        return cls(v0=(to_rat(x), to_rat(y)), length=to_rat(length))

    @property
    def sign(self) -> int:
        return (self.length > 0) - (self.length < 0)

    @property
    def valency(self) -> int:
        return 4 if self.length == 0 else 3

    @property
    def edge_direction(self) -> IntVec2 | None:
        if self.sign == 0:
            return None
        return (1, 1) if self.sign > 0 else (-1, 1)

    @property
    def v1(self) -> Vec2:
        x, y = self.v0
        if self.sign >= 0:
            return (x + self.length, y + self.length)
        return (x + self.length, y - self.length)

    @property
    def vertices(self) -> dict[str, Vec2]:
        if self.sign == 0:
            return {"v0": self.v0}
        return {"v0": self.v0, "v1": self.v1}

    @property
    def legs(self) -> tuple[Curve11Leg, ...]:
        legs = []
        for base, point in self.vertices.items():
            for compass in VERTEX_LEGS[(self.sign, base)]:
                legs.append(
                    Curve11Leg(name=f"{base}-{compass}", base=base, start=point, direction=COMPASS[compass])
                )
        return tuple(legs)

    def leg(self, name: str) -> Curve11Leg:
        return next(leg for leg in self.legs if leg.name == name)


def segre_psi(x: RatLike, y: RatLike, z: RatLike) -> Curve11Param:
    """Map Segre coordinates (x, y, z) to (v0, ℓ)."""
    x, y, z = to_rat(x), to_rat(y), to_rat(z)
    if x + y >= z:
        return Curve11Param(v0=(x, z - x), length=z - x - y)
    return Curve11Param(v0=(x, y), length=z - x - y)


def segre_psi_inverse(param: Curve11Param) -> tuple[Fraction, Fraction, Fraction]:
    a, b = param.v0
    if param.length >= 0:
        return a, b, a + b + param.length
    return a, b - param.length, a + b


def translate(param: Curve11Param, shift: Sequence[Fraction]) -> Curve11Param:
    return Curve11Param(v0=(param.v0[0] + shift[0], param.v0[1] + shift[1]), length=param.length)
