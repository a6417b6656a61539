"""Tritangent classes and their bounded and non-special bounded parts."""

from dataclasses import dataclass, replace
from typing import Callable

from loguru import logger
from tropical_polyhedra import CellComplex3, connected_components

from tritangent_classes.complexes.tritangents import TritangentCell, TritangentComplex
from tritangent_classes.consts import ADMISSIBLE_DIMENSIONS, EXPECTED_CLASS_COUNT
from tritangent_classes.exceptions import (
    ClassCountError,
    DisconnectedComplexError,
    InadmissibleDimensionsError,
    NonGenericCurveError,
)

Predicate = Callable[[TritangentCell], bool]


@dataclass(frozen=True)
class TritangentClass:
    """One connected component Θ of the tritangent complex.

    The three complexes share the cell numbering of the tritangent complex
    through `cell_ids`. `bounded` and `nonspecial` stay None until computed.
    """

    id: int
    complex: CellComplex3
    bounded: CellComplex3 | None = None
    nonspecial: CellComplex3 | None = None
    unbounded_sign_switched: bool = False

    @property
    def dims(self) -> tuple[int, int, int]:
        if self.bounded is None or self.nonspecial is None:
            raise ValueError(f"Class {self.id} has no bounded part yet")
        return (self.nonspecial.dim, self.bounded.dim, self.complex.dim)


def split_classes(tc: TritangentComplex, strict: bool = True) -> list[TritangentClass]:
    components = connected_components(tc.complex)
    logger.info(f"Tritangent complex splits into {len(components)} classes")
    if strict and len(components) != EXPECTED_CLASS_COUNT:
        raise ClassCountError(len(components))
    return [TritangentClass(id=k, complex=c) for k, c in enumerate(components, start=1)]


def _dual(tc: TritangentComplex, cell: TritangentCell, vertex: str):
    return tc.curve.maximizers(cell.member.vertices.get(vertex, cell.member.v0))


def _has(dual, required, excluded) -> bool:
    return set(required) <= dual and not (set(excluded) & dual)


def unbounded_predicates(tc: TritangentComplex, switched: bool = False) -> dict[str, Predicate]:
    """Chamber predicates of the cells removed from Θ to obtain Θᵇ.

    A U predicate holds when the vertex lies in the open corner chamber, so its
    dual cell is exactly the corner lattice point. Cells on the boundary of a
    corner chamber stay. `switched` applies the two predicates for the lower-right and upper-left
    chambers on the side ℓ < 0.
    """
    lower = -1 if switched else 1

    def member_v1_lower(cell: TritangentCell):
        x, y = cell.member.v0
        length = cell.member.length
        return tc.curve.maximizers((x + length, y - length))

    return {
        "U0+": lambda c: c.side > 0 and _dual(tc, c, "v0") == {(0, 0)},
        "U1+": lambda c: c.side > 0 and _dual(tc, c, "v1") == {(3, 3)},
        "U0-": lambda c: c.side == lower and _dual(tc, c, "v0") == {(3, 0)},
        "U1-": lambda c: c.side == lower and member_v1_lower(c) == {(0, 3)},
        "R0+": lambda c: c.side > 0 and _has(_dual(tc, c, "v0"), [(1, 0), (0, 1)], [(0, 2), (1, 1), (2, 0)]),
        "R0-": lambda c: c.side < 0 and _has(_dual(tc, c, "v0"), [(2, 0), (3, 1)], [(1, 0), (2, 1), (3, 2)]),
        "R1+": lambda c: c.side > 0 and _has(_dual(tc, c, "v1"), [(2, 3), (3, 2)], [(1, 3), (2, 2), (3, 1)]),
        "R1-": lambda c: c.side < 0 and _has(_dual(tc, c, "v1"), [(0, 2), (1, 3)], [(0, 1), (1, 2), (2, 3)]),
    }


def _remove(theta: CellComplex3, tc: TritangentComplex, predicates: dict[str, Predicate]) -> CellComplex3:
    keep = []
    for local, cell_id in enumerate(theta.cell_ids):
        cell = tc.cells[cell_id]
        hit = next((name for name, p in predicates.items() if p(cell)), None)
        if hit is None:
            keep.append(local)
        else:
            logger.trace(f"Cell {cell.key} removed by {hit}")
    return theta.subcomplex(theta.closure(keep))


def bounded_subcomplex(cls: TritangentClass, tc: TritangentComplex) -> TritangentClass:
    """Θᵇ: drop the U and R cells, then close under faces.

    Raises NonGenericCurveError when nothing is left.
    """
    bounded = _remove(cls.complex, tc, unbounded_predicates(tc))
    switched = False
    if any(not cell.is_bounded for cell in bounded.cells):
        logger.warning(f"Class {cls.id}: rays survive the printed U predicates, retrying with ℓ < 0")
        retry = _remove(cls.complex, tc, unbounded_predicates(tc, switched=True))
        if len(retry) and all(cell.is_bounded for cell in retry.cells):
            bounded, switched = retry, True
    if not len(bounded):
        raise NonGenericCurveError("empty bounded part", f"class {cls.id}")
    return replace(cls, bounded=bounded, unbounded_sign_switched=switched)


def nonspecial_subcomplex(cls: TritangentClass, tc: TritangentComplex, strict: bool = True) -> TritangentClass:
    """Θᵇ_ns: Θᵇ without the cells of special tritangents."""
    if cls.bounded is None:
        cls = bounded_subcomplex(cls, tc)
    bounded = cls.bounded
    keep = [
        local
        for local, cell_id in enumerate(bounded.cell_ids)
        if tc.cells[cell_id].tangency is None or not tc.cells[cell_id].tangency.special
    ]
    nonspecial = bounded.subcomplex(keep)
    if strict and not is_connected(nonspecial):
        raise DisconnectedComplexError(f"disconnected Θᵇ_ns in class {cls.id}")
    return replace(cls, nonspecial=nonspecial)


def check_dims(cls: TritangentClass) -> tuple[int, int, int]:
    dims = cls.dims
    if dims not in ADMISSIBLE_DIMENSIONS:
        raise InadmissibleDimensionsError(f"inadmissible dimension tuple {dims} in class {cls.id}")
    return dims


def is_connected(k: CellComplex3) -> bool:
    return len(k) > 0 and len(connected_components(k)) == 1


def analyze_classes(tc: TritangentComplex, strict: bool = True) -> list[TritangentClass]:
    """Split the complex and compute Θᵇ and Θᵇ_ns of every class."""
    classes = []
    for cls in split_classes(tc, strict=strict):
        cls = nonspecial_subcomplex(bounded_subcomplex(cls, tc), tc, strict=strict)
        logger.debug(f"Class {cls.id}: {len(cls.complex)} cells, dims {cls.dims}")
        classes.append(cls)
    return classes
