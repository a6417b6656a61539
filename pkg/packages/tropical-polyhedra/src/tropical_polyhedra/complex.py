from dataclasses import dataclass
from typing import Iterable, Sequence

import networkx as nx
from loguru import logger

from tropical_polyhedra.polyhedron import Polyhedron3, interior_point


@dataclass(frozen=True)
class CellComplex3:
    """Finite set of relatively open polyhedra with their face incidences.

    `adjacency` holds local index pairs (face, cell) meaning cell `face` lies in
    the closure of cell `cell`. `cell_ids` keeps the index each cell had in the
    complex it was cut from, so payloads can be looked up after restriction.
    """

    cells: tuple[Polyhedron3, ...]
    adjacency: frozenset[tuple[int, int]]
    cell_ids: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not self.cell_ids:
            object.__setattr__(self, "cell_ids", tuple(range(len(self.cells))))
        if len(self.cell_ids) != len(self.cells):
            raise ValueError("cell_ids must align with cells")

    @classmethod
    def from_cells(cls, cells: Sequence[Polyhedron3], cell_ids: Sequence[int] = ()) -> "CellComplex3":
        return cls(
            cells=tuple(cells),
            adjacency=face_adjacency(cells),
            cell_ids=tuple(cell_ids),
        )

    def __len__(self) -> int:
        return len(self.cells)

    @property
    def dim(self) -> int:
        return max((c.dim for c in self.cells), default=-1)

    def index_of(self, cell_id: int) -> int:
        return self.cell_ids.index(cell_id)

    def faces_of(self, index: int) -> list[int]:
        return sorted(face for face, cell in self.adjacency if cell == index)

    def subcomplex(self, indices: Iterable[int]) -> "CellComplex3":
        keep = sorted(set(indices))
        local = {old: new for new, old in enumerate(keep)}
        return CellComplex3(
            cells=tuple(self.cells[i] for i in keep),
            adjacency=frozenset(
                (local[f], local[c]) for f, c in self.adjacency if f in local and c in local
            ),
            cell_ids=tuple(self.cell_ids[i] for i in keep),
        )

    def closure(self, indices: Iterable[int]) -> set[int]:
        """Indices together with every face reachable from them."""
        result = set(indices)
        frontier = list(result)
        faces: dict[int, list[int]] = {}
        for f, c in self.adjacency:
            faces.setdefault(c, []).append(f)
        while frontier:
            i = frontier.pop()
            for f in faces.get(i, ()):
                if f not in result:
                    result.add(f)
                    frontier.append(f)
        return result


def is_face(face: Polyhedron3, cell: Polyhedron3) -> bool:
    """Cells of an arrangement: `face` lies in cl(cell) iff its interior point does."""
    if face.dim >= cell.dim:
        return False
    return cell.contains(interior_point(face), closed=True)


def face_adjacency(cells: Sequence[Polyhedron3]) -> frozenset[tuple[int, int]]:
    pairs = set()
    for i, a in enumerate(cells):
        for j, b in enumerate(cells):
            if i != j and is_face(a, b):
                pairs.add((i, j))
    return frozenset(pairs)


def connected_components(k: CellComplex3) -> list[CellComplex3]:
    """Split a complex into its connected components.

    Components are ordered by the lexicographically smallest interior point of
    their cells, which makes the result independent of the input order.
    """
    graph = nx.Graph()
    graph.add_nodes_from(range(len(k)))
    graph.add_edges_from(k.adjacency)
    components = [sorted(c) for c in nx.connected_components(graph)]
    components.sort(key=lambda comp: min(interior_point(k.cells[i]) for i in comp))
    logger.debug(f"Complex with {len(k)} cells has {len(components)} components")
    return [k.subcomplex(c) for c in components]
