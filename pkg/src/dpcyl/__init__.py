"""Exact lattice models of rank-one Du Val del Pezzo surfaces and a
decision procedure for cylinder existence."""

__version__ = "0.1.0"

from .curves import dual_graph, has_cycle, line_classes, lines_on_surface, roots
from .galois import (
    Decoration,
    SurfaceOverK,
    decorate_point,
    orbits,
    rank_one_check,
    rho_drop,
    rho_tilde,
    validate_action,
)
from .lattice import (
    IntersectionForm,
    hirzebruch_lattice,
    is_negative_definite,
    pair,
    standard_lattice,
)
from .oracle import Verdict, decide, decide_fibration
from .singularities import (
    SingularityProfile,
    TypeTriplet,
    central_vertex_variant,
    classify_component,
    construction_case,
    surface_type,
    validate_config,
)

__all__ = [
    "IntersectionForm",
    "SingularityProfile",
    "SurfaceOverK",
    "TypeTriplet",
    "Decoration",
    "Verdict",
    "standard_lattice",
    "hirzebruch_lattice",
    "pair",
    "is_negative_definite",
    "roots",
    "line_classes",
    "lines_on_surface",
    "dual_graph",
    "has_cycle",
    "validate_config",
    "classify_component",
    "surface_type",
    "central_vertex_variant",
    "construction_case",
    "validate_action",
    "orbits",
    "rho_drop",
    "rho_tilde",
    "decorate_point",
    "rank_one_check",
    "decide",
    "decide_fibration",
]
