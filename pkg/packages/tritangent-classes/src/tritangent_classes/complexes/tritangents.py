from dataclasses import dataclass
from functools import cached_property

from loguru import logger
from tropical_curves import Curve11Param, CurveGamma
from tropical_polyhedra import CellComplex3, Polyhedron3, is_face

from tritangent_classes.complexes.arrangement import Arrangement3, CellKey, build_arrangement, representative
from tritangent_classes.tangency.models import TangencyTuple
from tritangent_classes.tangency.tritangent import is_tritangent


@dataclass(frozen=True)
class TritangentCell:
    """An arrangement cell with the tangency data of its representative.

    `tangency` is None only for a face whose representative fails the
    tritangency test; such faces are kept so the complex stays closed.
    """

    key: CellKey
    polyhedron: Polyhedron3
    member: Curve11Param
    tangency: TangencyTuple | None

    @property
    def side(self) -> int:
        return self.key[0]

    @property
    def dim(self) -> int:
        return self.polyhedron.dim


@dataclass(frozen=True)
class TritangentComplex:
    curve: CurveGamma
    arrangement: Arrangement3
    cells: tuple[TritangentCell, ...]
    complex: CellComplex3

    def __len__(self) -> int:
        return len(self.cells)

    @cached_property
    def index(self) -> dict[CellKey, int]:
        return {cell.key: k for k, cell in enumerate(self.cells)}


def _closed_star(arrangement: Arrangement3, index: int) -> list[int]:
    return [index, *arrangement.planar_cells[index].faces]


def face_keys(arrangement: Arrangement3, key: CellKey) -> list[CellKey]:
    """Keys that may label faces of the cell `key`, the cell itself excluded."""
    side, i, j = key
    first, second = _closed_star(arrangement, i), _closed_star(arrangement, j)
    found: dict[CellKey, None] = {}
    if side != 0:
        for a in first:
            for b in second:
                found[(side, a, b)] = None
    for t in sorted(set(first) & set(second)):
        found[(0, t, t)] = None
    found.pop(key, None)
    return list(found)


def _faces(arrangement: Arrangement3, key: CellKey) -> list[CellKey]:
    cell = arrangement.cell(key)
    faces = []
    for candidate in face_keys(arrangement, key):
        face = arrangement.cell(candidate)
        if not face.is_empty and is_face(face, cell):
            faces.append(candidate)
    return faces


def tritangent_complex(curve: CurveGamma, arrangement: Arrangement3 | None = None) -> TritangentComplex:
    """Closed union of the arrangement cells whose representative is tritangent."""
    arrangement = arrangement or build_arrangement(curve)
    tangencies: dict[CellKey, TangencyTuple | None] = {}
    for key in arrangement.candidate_keys():
        t = is_tritangent(representative(arrangement.cell(key)), curve, arrangement.scheme)
        if t is not None:
            tangencies[key] = t
    logger.info(f"{len(tangencies)} arrangement cells have tritangent representatives")

    faces_of: dict[CellKey, list[CellKey]] = {}
    frontier = list(tangencies)
    while frontier:
        key = frontier.pop()
        faces_of[key] = _faces(arrangement, key)
        for face in faces_of[key]:
            if face in tangencies:
                continue
            t = is_tritangent(representative(arrangement.cell(face)), curve, arrangement.scheme)
            if t is None:
                logger.warning(f"Face {face} of a tritangent cell has a non-tritangent representative")
            tangencies[face] = t
            frontier.append(face)

    keys = sorted(tangencies, key=lambda k: (arrangement.cell(k).dim, k))
    index = {key: n for n, key in enumerate(keys)}
    cells = tuple(
        TritangentCell(
            key=key,
            polyhedron=arrangement.cell(key),
            member=representative(arrangement.cell(key)),
            tangency=tangencies[key],
        )
        for key in keys
    )
    adjacency = frozenset((index[face], index[key]) for key in keys for face in faces_of[key])
    complex_ = CellComplex3(cells=tuple(c.polyhedron for c in cells), adjacency=adjacency)
    logger.info(f"Tritangent complex has {len(cells)} cells and {len(adjacency)} face incidences")
    return TritangentComplex(curve=curve, arrangement=arrangement, cells=cells, complex=complex_)
