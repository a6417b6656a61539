"""Numbers a + bε with ε a positive infinitesimal."""

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True, order=True)
class EpsNumber:
    a: Fraction
    b: Fraction = Fraction(0)

    def __add__(self, other: "EpsNumber") -> "EpsNumber":
        return EpsNumber(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "EpsNumber") -> "EpsNumber":
        return EpsNumber(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "EpsNumber":
        return EpsNumber(-self.a, -self.b)

    def scale(self, k: Fraction | int) -> "EpsNumber":
        return EpsNumber(self.a * k, self.b * k)

    def divide(self, k: Fraction | int) -> "EpsNumber":
        return EpsNumber(Fraction(self.a) / k, Fraction(self.b) / k)

    def sign(self) -> int:
        if self.a:
            return 1 if self.a > 0 else -1
        if self.b:
            return 1 if self.b > 0 else -1
        return 0

    @classmethod
    def of(cls, value: Fraction | int) -> "EpsNumber":
        return cls(Fraction(value), Fraction(0))
