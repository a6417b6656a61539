"""Exact rational helpers shared by the polyhedral code.

All coordinates are `fractions.Fraction`. Directions (rays, normals) are kept as
primitive integer tuples so that they compare and hash canonically.
"""

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence, TypeAlias, Union

Rat: TypeAlias = Fraction
Vec2: TypeAlias = tuple[Fraction, Fraction]
Vec3: TypeAlias = tuple[Fraction, Fraction, Fraction]
IntVec2: TypeAlias = tuple[int, int]
IntVec3: TypeAlias = tuple[int, int, int]
RatLike: TypeAlias = Union[int, str, Fraction]


def to_rat(value: RatLike) -> Fraction:
    """Parse an int, a Fraction or a string such as "3", "-7/2"."""
    if isinstance(value, float):
        raise ValueError(f"Refusing inexact float value {value!r}")
    try:
        return Fraction(value)
    except ZeroDivisionError as e:
        raise ValueError(f"Invalid rational {value!r}: zero denominator") from e


def rat_to_str(value: Fraction | int) -> str:
    return str(Fraction(value))


def vec(*coords: RatLike) -> tuple[Fraction, ...]:
    return tuple(to_rat(c) for c in coords)


def primitive(v: Sequence[int | Fraction]) -> tuple[int, ...]:
    """Smallest positive integer multiple of `v` with coprime entries."""
    denominators = [Fraction(x).denominator for x in v]
    scale = lcm(*denominators)
    ints = [int(Fraction(x) * scale) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("Zero vector has no primitive direction")
    return tuple(x // g for x in ints)


def add(u: Sequence, v: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def scale(u: Sequence, k: Fraction | int) -> tuple:
    return tuple(k * a for a in u)


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def det2(u: Sequence, v: Sequence):
    return u[0] * v[1] - u[1] * v[0]


def cross3(u: Sequence, v: Sequence) -> tuple:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def det3(r0: Sequence, r1: Sequence, r2: Sequence):
    return dot(r0, cross3(r1, r2))


def homogenize(p: Sequence[Fraction]) -> tuple[tuple[int, ...], int]:
    """Write `p` as integer coordinates over a common positive denominator."""
    w = lcm(*(Fraction(x).denominator for x in p))
    return tuple(int(Fraction(x) * w) for x in p), w


def row_reduce(rows: Sequence[Sequence[Fraction | int]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form. Returns the non-zero rows and pivot columns."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                factor = m[i][col]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence[Fraction | int]]) -> int:
    return len(row_reduce(rows)[1])


def nullspace(rows: Sequence[Sequence[Fraction | int]], ncols: int) -> list[tuple[int, ...]]:
    """Primitive integer basis of {x : row . x = 0 for every row}."""
    reduced, pivots = row_reduce(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            x[p] = -row[f]
        basis.append(primitive(x))
    return basis
