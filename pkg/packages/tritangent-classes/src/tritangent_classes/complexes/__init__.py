from tritangent_classes.complexes.arrangement import Arrangement3, build_arrangement, representative
from tritangent_classes.complexes.classes import (
    TritangentClass,
    analyze_classes,
    bounded_subcomplex,
    check_dims,
    nonspecial_subcomplex,
    split_classes,
)
from tritangent_classes.complexes.orders import OrderRelation, PartialOrderTag, compare_w, order_lines
from tritangent_classes.complexes.tritangents import TritangentCell, TritangentComplex, tritangent_complex

__all__ = [
    "Arrangement3",
    "OrderRelation",
    "PartialOrderTag",
    "TritangentCell",
    "TritangentClass",
    "TritangentComplex",
    "analyze_classes",
    "bounded_subcomplex",
    "build_arrangement",
    "check_dims",
    "compare_w",
    "nonspecial_subcomplex",
    "order_lines",
    "representative",
    "split_classes",
    "tritangent_complex",
]
