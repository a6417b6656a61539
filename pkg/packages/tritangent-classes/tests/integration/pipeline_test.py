import itertools

import networkx as nx
import pytest
from tropical_polyhedra.complex import is_face

from tritangent_classes.cli import run_analysis
from tritangent_classes.config import AnalysisConfig
from tritangent_classes.consts import ADMISSIBLE_DIMENSIONS, ADMISSIBLE_PARTITIONS, EXIT_OK, TRITANGENT_PATTERNS
from tritangent_classes.lifting.report import LiftingReport, verify_report


def test_fifteen_classes(generic_classes):
    assert [c.id for c in generic_classes] == list(range(1, 16))


def test_nested_subcomplexes(generic_classes):
    for cls in generic_classes:
        assert set(cls.nonspecial.cell_ids) <= set(cls.bounded.cell_ids) <= set(cls.complex.cell_ids)
        assert cls.dims in ADMISSIBLE_DIMENSIONS


def test_cells_are_tritangent(generic_complex):
    tangent = [cell for cell in generic_complex.cells if cell.tangency is not None]
    assert tangent
    for cell in tangent:
        assert cell.tangency.multiplicities in TRITANGENT_PATTERNS
        assert cell.tangency.member == cell.member


def test_complex_is_closed_under_faces(generic_complex):
    k = generic_complex.complex
    assert k.closure(range(len(k))) == set(range(len(k)))
    for face, cell in k.adjacency:
        assert k.cells[face].dim < k.cells[cell].dim


def test_report(generic_report, tmp_path):
    assert len(generic_report.classes) == 15
    assert {
        "class_count",
        "dimensions_admissible",
        "connectivity",
        "bounded",
        "partitions_admissible",
        "lift_totals",
        "partition_by_dimension",
        "partition_by_bounded_dimension",
        "type_dimension",
        "d4_invariance",
    } <= set(generic_report.checks)
    assert generic_report.passed
    assert generic_report.non_generic is False
    for name, check in generic_report.checks.items():
        if name != "d4_invariance":
            assert check.passed is True, f"{name}: {check.detail}"
    assert generic_report.checks["d4_invariance"].passed is None
    assert all(cls.partition in ADMISSIBLE_PARTITIONS for cls in generic_report.classes)

    path = generic_report.save(tmp_path / "report.json")
    assert '"schemaVersion": 1' in path.read_text()
    assert LiftingReport.load(path) == generic_report


def test_bounded_cells_are_flagged(generic_report):
    for cls in generic_report.classes:
        flags = [(cell.bounded, cell.nonspecial) for cell in cls.cells]
        assert all(bounded or not nonspecial for bounded, nonspecial in flags)
        assert any(bounded for bounded, _ in flags)


def test_nonspecial_parts_are_path_connected(generic_classes):
    positive = [cls for cls in generic_classes if cls.dims[0] > 0]
    assert positive
    for cls in positive:
        cells = cls.nonspecial.cells
        graph = nx.Graph()
        graph.add_nodes_from(range(len(cells)))
        for i, j in itertools.combinations(range(len(cells)), 2):
            if is_face(cells[i], cells[j]) or is_face(cells[j], cells[i]):
                graph.add_edge(i, j)
        assert nx.is_connected(graph), f"class {cls.id}"


def test_report_is_invariant_under_symmetries(generic_curve):
    report = verify_report(generic_curve, check_d4=True)
    assert report.checks["d4_invariance"].passed is True
    assert report.passed


@pytest.mark.parametrize("seed", range(5))
def test_random_curves_pass_all_checks(seed, tmp_path):
    report, code = run_analysis(AnalysisConfig(random_seed=seed, output_dir=tmp_path))
    assert code == EXIT_OK
    assert report.passed, report.failed_checks
    assert len(report.classes) == 15
    assert all(cls.partition in ADMISSIBLE_PARTITIONS for cls in report.classes)


def test_generic_curve_realizes_the_low_dimensional_partitions(generic_report):
    by_partition = {cls.partition: cls.dims for cls in generic_report.classes}
    assert by_partition[(0, 0, 2, 0)][0] == 1
    assert by_partition[(0, 0, 0, 1)][0] == 0
