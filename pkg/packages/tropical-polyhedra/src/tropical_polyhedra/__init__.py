from tropical_polyhedra.complex import CellComplex3, connected_components, face_adjacency, is_face
from tropical_polyhedra.exceptions import ArrangementError, EmptyCellError, PolyhedronError
from tropical_polyhedra.lines import Cell2, Constraint2, Line2, LineArrangement
from tropical_polyhedra.polyhedron import (
    HalfSpace3,
    Polyhedron3,
    equality,
    interior_point,
    make_polyhedron,
)

__version__ = "0.1.0"

__all__ = [
    "ArrangementError",
    "Cell2",
    "CellComplex3",
    "Constraint2",
    "EmptyCellError",
    "HalfSpace3",
    "Line2",
    "LineArrangement",
    "Polyhedron3",
    "PolyhedronError",
    "connected_components",
    "equality",
    "face_adjacency",
    "interior_point",
    "is_face",
    "make_polyhedron",
]
