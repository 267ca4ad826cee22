"""
Holonomy module initialization.
"""

from app.holonomy.models import (
    CYCLE,
    PATH,
    Classification,
    DiscreteConnection,
    DiscreteSpacetime,
    Equivalence,
    GaugeTransform,
    ResidualGroup,
)
from app.holonomy.holonomy import (
    apply_gauge,
    build_spacetime,
    classify,
    compose_gauges,
    connection_distance,
    connection_from_matrices,
    connection_from_parameters,
    equivalent,
    find_equivalence,
    holonomy,
    holonomy_angle,
    identity_connection,
    random_connection,
    random_gauge,
    spectral_mismatch,
    trivializing_gauge,
)

__all__ = [
    "CYCLE",
    "PATH",
    "Classification",
    "DiscreteConnection",
    "DiscreteSpacetime",
    "Equivalence",
    "GaugeTransform",
    "ResidualGroup",
    "apply_gauge",
    "build_spacetime",
    "classify",
    "compose_gauges",
    "connection_distance",
    "connection_from_matrices",
    "connection_from_parameters",
    "equivalent",
    "find_equivalence",
    "holonomy",
    "holonomy_angle",
    "identity_connection",
    "random_connection",
    "random_gauge",
    "spectral_mismatch",
    "trivializing_gauge",
]
