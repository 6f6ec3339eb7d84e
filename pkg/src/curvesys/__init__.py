"""Extremal systems of simple closed curves pairwise meeting at most once.

Submodules: ``gf2`` (symplectic linear algebra over Z/2Z), ``model`` and
``io`` (curve systems and their JSON form), ``verify`` (necessary
conditions and bounds), ``torus``, ``quotient`` (genus-2 hyperelliptic
model), ``constructions`` and ``cli``.
"""

from .constructions import boundary_system, closed_lower_system, hyperelliptic_system, polygon_system
from .errors import (
    CurveSysError,
    DimensionError,
    FormatError,
    PreconditionError,
    RankError,
    StructureError,
    UnsupportedError,
)
from .gf2 import (
    Gf2Matrix,
    Gf2Vector,
    canonical_family,
    complete_symplectic_basis,
    find_symplectic_map,
    is_symplectic,
    max_odd_family,
    pair,
    rank,
    validate_odd_family,
)
from .io import read_system, write_system
from .model import Curve, CurveSystem, Flavor, IntersectionGraph, intersection_graph
from .quotient import (
    QuotientGraph,
    enumerate_max_systems_genus2,
    graph_to_system,
    is_planar,
    stacked_triangulation,
    weierstrass_pairing,
)
from .torus import TorusCurve, search_torus, torus_intersection
from .verify import (
    VerificationReport,
    bounds,
    check_degree_bounds,
    turan_independent_set,
    verify_all,
    verify_class_budget,
    verify_homology_consistency,
    verify_k_system,
)

__version__ = "0.1.0"
