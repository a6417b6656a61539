from tritangent_classes.tangency.catalog import load_catalog, lookup
from tritangent_classes.tangency.classify import ComponentFeatures, classify, component_features
from tritangent_classes.tangency.epsilon import EpsNumber
from tritangent_classes.tangency.intersection import (
    leg_is_even,
    perturbation_for,
    stable_intersection,
)
from tritangent_classes.tangency.models import (
    Flavor,
    IntersectionComponent,
    PerturbationScheme,
    TangencyPoint,
    TangencyTuple,
    TangencyType,
)
from tritangent_classes.tangency.tritangent import compute_mu, is_special, is_tritangent

__all__ = [
    "ComponentFeatures",
    "EpsNumber",
    "Flavor",
    "IntersectionComponent",
    "PerturbationScheme",
    "TangencyPoint",
    "TangencyTuple",
    "TangencyType",
    "classify",
    "component_features",
    "compute_mu",
    "is_special",
    "is_tritangent",
    "leg_is_even",
    "load_catalog",
    "lookup",
    "perturbation_for",
    "stable_intersection",
]
