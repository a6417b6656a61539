"""Per-class lifting partitions and the consistency checks of an analysis."""

from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field
from tropical_curves import CoeffMatrix, Curve11Param, CurveGamma, D4Element, d4_apply
from tropical_polyhedra.rational import rat_to_str

from tritangent_classes.complexes.classes import TritangentClass, analyze_classes, is_connected
from tritangent_classes.complexes.tritangents import TritangentCell, TritangentComplex, tritangent_complex
from tritangent_classes.consts import (
    ADMISSIBLE_DIMENSIONS,
    ADMISSIBLE_PARTITIONS,
    EXPECTED_CLASS_COUNT,
    LIFT_TOTAL,
    LOCAL_TYPES_OF_3_CELLS,
    PARTITION_BY_DIMENSION,
    PARTITIONS_BY_BOUNDED_DIMENSION,
    SCHEMA_VERSION,
    ZERO_CELL_TYPES,
)
from tritangent_classes.exceptions import NonGenericCurveError
from tritangent_classes.lifting.partition import (
    LiftableMember,
    Partition,
    class_partition,
    has4b,
    partition_total,
)


class CheckResult(BaseModel):
    """`passed` is None when the check did not apply or was skipped."""

    passed: bool | None
    detail: str = ""


class MemberReport(BaseModel):
    v0: tuple[str, str]
    length: str
    multiplicity: int | None = None
    labels: list[str]


class CellReport(BaseModel):
    key: tuple[int, int, int]
    dim: int
    side: int
    vertices: list[tuple[str, str, str]]
    rays: list[tuple[int, int, int]]
    member: MemberReport
    bounded: bool
    nonspecial: bool


class ClassReport(BaseModel):
    id: int
    partition: tuple[int, int, int, int] | None
    dims: tuple[int, int, int]
    has4b: bool
    unbounded_sign_switched: bool = False
    bounded_connected: bool
    nonspecial_connected: bool
    liftable_members: list[MemberReport]
    cells: list[CellReport]


class CurveSummary(BaseModel):
    coefficients: CoeffMatrix
    vertices: list[tuple[str, str]]
    edges: list[tuple[tuple[str, str], tuple[str, str]]]
    legs: list[tuple[tuple[str, str], tuple[int, int]]]


class LiftingReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(default=SCHEMA_VERSION, alias="schemaVersion")
    curve: CurveSummary
    classes: list[ClassReport]
    checks: dict[str, CheckResult]
    non_generic: bool = False
    perturbation_rounds: int = 0

    @property
    def passed(self) -> bool:
        return all(c.passed is not False for c in self.checks.values())

    @property
    def failed_checks(self) -> list[str]:
        return [name for name, c in self.checks.items() if c.passed is False]

    def save(self, path: Path | str) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.model_dump_json(indent=2, by_alias=True))
        return path

    @classmethod
    def load(cls, path: Path | str) -> "LiftingReport":
        return cls.model_validate_json(Path(path).read_text())


@dataclass
class Analysis:
    """Everything computed for one curve before it is summarized."""

    curve: CurveGamma
    complex: TritangentComplex
    classes: list[TritangentClass]
    partitions: dict[int, Partition | None] = field(default_factory=dict)
    members: dict[int, list[LiftableMember]] = field(default_factory=dict)
    with4b: dict[int, bool] = field(default_factory=dict)
    non_generic: NonGenericCurveError | None = None

    @property
    def signature(self) -> Counter:
        """Multiset of (partition, dims) pairs, which the D4 action preserves."""
        return Counter((self.partitions.get(c.id), c.dims) for c in self.classes)


def analyze(curve: CurveGamma) -> Analysis:
    tc = tritangent_complex(curve)
    analysis = Analysis(curve=curve, complex=tc, classes=analyze_classes(tc, strict=False))
    for cls in analysis.classes:
        analysis.with4b[cls.id] = has4b(cls, tc)
        try:
            analysis.partitions[cls.id], analysis.members[cls.id] = class_partition(cls, tc)
        except NonGenericCurveError as e:
            logger.warning(f"Class {cls.id}: {e}")
            analysis.partitions[cls.id], analysis.members[cls.id] = None, []
            analysis.non_generic = analysis.non_generic or e
    return analysis


def _member_report(member: Curve11Param, multiplicity: int | None, labels: tuple[str, ...]) -> MemberReport:
    return MemberReport(
        v0=(rat_to_str(member.v0[0]), rat_to_str(member.v0[1])),
        length=rat_to_str(member.length),
        multiplicity=multiplicity,
        labels=list(labels),
    )


def _cell_report(cell: TritangentCell, bounded: set[int], nonspecial: set[int], cell_id: int) -> CellReport:
    p = cell.polyhedron
    return CellReport(
        key=cell.key,
        dim=cell.dim,
        side=cell.side,
        vertices=[tuple(rat_to_str(x) for x in v) for v in p.vertices],
        rays=[tuple(r) for r in p.rays],
        member=_member_report(cell.member, None, cell.tangency.labels if cell.tangency else ()),
        bounded=cell_id in bounded,
        nonspecial=cell_id in nonspecial,
    )


def _class_report(analysis: Analysis, cls: TritangentClass) -> ClassReport:
    tc = analysis.complex
    bounded, nonspecial = set(cls.bounded.cell_ids), set(cls.nonspecial.cell_ids)
    return ClassReport(
        id=cls.id,
        partition=analysis.partitions.get(cls.id),
        dims=cls.dims,
        has4b=analysis.with4b.get(cls.id, False),
        unbounded_sign_switched=cls.unbounded_sign_switched,
        bounded_connected=is_connected(cls.bounded),
        nonspecial_connected=is_connected(cls.nonspecial),
        liftable_members=[
            _member_report(m.member, m.multiplicity, m.labels) for m in analysis.members.get(cls.id, [])
        ],
        cells=[_cell_report(tc.cells[i], bounded, nonspecial, i) for i in cls.complex.cell_ids],
    )


def curve_summary(curve: CurveGamma) -> CurveSummary:
    def point(p) -> tuple[str, str]:
        return (rat_to_str(p[0]), rat_to_str(p[1]))

    return CurveSummary(
        coefficients=curve.coefficients,
        vertices=[point(v.point) for v in curve.vertices],
        edges=[(point(e.start), point(e.end)) for e in curve.edges],
        legs=[(point(leg.start), leg.direction) for leg in curve.legs],
    )


def _check(passed: bool | None, detail: str = "") -> CheckResult:
    return CheckResult(passed=passed, detail=detail)


def _failures(items: list[tuple[int, bool]]) -> str:
    bad = [str(i) for i, ok in items if not ok]
    return f"classes {', '.join(bad)}" if bad else ""


def run_checks(analysis: Analysis, d4_signatures: dict[str, Counter] | None = None) -> dict[str, CheckResult]:
    classes = analysis.classes
    partitions = analysis.partitions
    checks: dict[str, CheckResult] = {}

    checks["class_count"] = _check(
        len(classes) == EXPECTED_CLASS_COUNT, f"{len(classes)} classes, expected {EXPECTED_CLASS_COUNT}"
    )
    items = [(c.id, c.dims in ADMISSIBLE_DIMENSIONS) for c in classes]
    checks["dimensions_admissible"] = _check(all(ok for _, ok in items), _failures(items))
    items = [(c.id, is_connected(c.bounded) and is_connected(c.nonspecial)) for c in classes]
    checks["connectivity"] = _check(all(ok for _, ok in items), _failures(items))
    items = [(c.id, all(cell.is_bounded for cell in c.bounded.cells)) for c in classes]
    checks["bounded"] = _check(all(ok for _, ok in items), _failures(items))

    items = [(c.id, partitions.get(c.id) in ADMISSIBLE_PARTITIONS) for c in classes]
    checks["partitions_admissible"] = _check(all(ok for _, ok in items), _failures(items))
    items = [(c.id, partitions.get(c.id) is not None and partition_total(partitions[c.id]) == LIFT_TOTAL) for c in classes]
    detail = _failures(items)
    if analysis.non_generic is not None:
        detail = f"{detail}; {analysis.non_generic}".strip("; ")
    checks["lift_totals"] = _check(all(ok for _, ok in items), detail)

    items = [
        (c.id, PARTITION_BY_DIMENSION.get((c.dims[0], analysis.with4b.get(c.id, False))) == partitions.get(c.id))
        for c in classes
    ]
    checks["partition_by_dimension"] = _check(all(ok for _, ok in items), _failures(items))

    applicable = [c for c in classes if c.dims[0] == c.dims[1]]
    items = [
        (c.id, partitions.get(c.id) in PARTITIONS_BY_BOUNDED_DIMENSION.get(c.dims[1], frozenset()))
        for c in applicable
    ]
    checks["partition_by_bounded_dimension"] = _check(
        all(ok for _, ok in items) if applicable else None,
        f"conditional on generic edge lengths; {len(applicable)} classes apply. {_failures(items)}".strip(),
    )

    bad = []
    for cell in analysis.complex.cells:
        labels = set(cell.tangency.labels) if cell.tangency else set()
        if cell.dim == 3 and not labels <= LOCAL_TYPES_OF_3_CELLS:
            bad.append(f"{cell.key}: {sorted(labels)}")
        elif cell.dim > 0 and labels & ZERO_CELL_TYPES:
            bad.append(f"{cell.key}: {sorted(labels & ZERO_CELL_TYPES)}")
    checks["type_dimension"] = _check(not bad, "; ".join(bad[:5]))

    if d4_signatures is None:
        checks["d4_invariance"] = _check(None, "skipped")
    else:
        broken = [name for name, sig in d4_signatures.items() if sig != analysis.signature]
        checks["d4_invariance"] = _check(not broken, ", ".join(broken))

    for name, result in checks.items():
        if result.passed is False:
            logger.error(f"Check {name} failed: {result.detail}")
    return checks


def d4_signatures(curve: CurveGamma) -> dict[str, Counter]:
    """Signatures of the seven non-trivial symmetric images of the curve."""
    found = {}
    for g in D4Element.full_group():
        if g == D4Element():
            continue
        logger.info(f"Re-running the analysis for {g}")
        found[repr(g)] = analyze(d4_apply(g, curve)).signature
    return found


def build_report(analysis: Analysis, check_d4: bool = False) -> LiftingReport:
    signatures = d4_signatures(analysis.curve) if check_d4 else None
    return LiftingReport(
        curve=curve_summary(analysis.curve),
        classes=[_class_report(analysis, c) for c in analysis.classes],
        checks=run_checks(analysis, signatures),
        non_generic=analysis.non_generic is not None,
    )


def verify_report(curve: CurveGamma, check_d4: bool = False) -> LiftingReport:
    """Run the full pipeline on a smooth curve and record every consistency check."""
    return build_report(analyze(curve), check_d4=check_d4)
