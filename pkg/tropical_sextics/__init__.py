import tritangent_classes
import tropical_curves
import tropical_polyhedra

__all__ = ["tropical_polyhedra", "tropical_curves", "tritangent_classes"]
