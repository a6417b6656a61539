from dataclasses import dataclass
from math import prod

from loguru import logger
from tropical_curves import Curve11Param

from tritangent_classes.complexes.classes import TritangentClass
from tritangent_classes.complexes.tritangents import TritangentComplex
from tritangent_classes.consts import LIFT_TOTAL, LIFT_VALUES
from tritangent_classes.exceptions import NonGenericCurveError
from tritangent_classes.lifting.table import local_mult
from tritangent_classes.tangency.models import TangencyTuple

Partition = tuple[int, int, int, int]


@dataclass(frozen=True)
class LiftableMember:
    member: Curve11Param
    multiplicity: int
    labels: tuple[str, ...]
    cell_id: int


def member_mult(t: TangencyTuple) -> int:
    """Product of the local multiplicities; special members never lift."""
    if t.special:
        return 0
    return prod(local_mult(t, k) for k in range(len(t.components)))


def partition_of(multiplicities: list[int]) -> Partition:
    return tuple(multiplicities.count(v) for v in LIFT_VALUES)


def partition_total(partition: Partition) -> int:
    return sum(n * v for n, v in zip(partition, LIFT_VALUES))


def liftable_members(cls: TritangentClass, tc: TritangentComplex) -> list[LiftableMember]:
    """Members of Θᵇ_ns with positive lifting multiplicity, all at 0-cells."""
    members = []
    for cell_id in cls.nonspecial.cell_ids:
        cell = tc.cells[cell_id]
        if cell.tangency is None:
            continue
        m = member_mult(cell.tangency)
        if m == 0:
            continue
        if cell.dim > 0:
            raise NonGenericCurveError(
                "positive-dimensional liftable family",
                f"class {cls.id}, cell {cell.key} of dimension {cell.dim} has multiplicity {m}",
            )
        members.append(
            LiftableMember(member=cell.member, multiplicity=m, labels=cell.tangency.labels, cell_id=cell_id)
        )
    return members


def class_partition(cls: TritangentClass, tc: TritangentComplex) -> tuple[Partition, list[LiftableMember]]:
    members = liftable_members(cls, tc)
    partition = partition_of([m.multiplicity for m in members])
    total = partition_total(partition)
    if total != LIFT_TOTAL or len(members) != sum(partition):
        raise NonGenericCurveError("total ≠ 8", f"class {cls.id} lifts to {total} with partition {partition}")
    logger.debug(f"Class {cls.id}: partition {partition}")
    return partition, members


def has4b(cls: TritangentClass, tc: TritangentComplex) -> bool:
    return any(
        tc.cells[i].tangency is not None and "(4b)" in tc.cells[i].tangency.labels
        for i in cls.nonspecial.cell_ids
    )
