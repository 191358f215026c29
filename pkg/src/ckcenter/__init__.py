"""Exact computation of the center of Cuntz-Krieger graph algebras.

Given a finite directed multigraph, this package determines the center of
its graph algebra as an explicit direct sum of scalar summands and circle
algebra summands, constructs generating central elements, and verifies
every claim by exact rational arithmetic in the path algebra.
"""

from .algebra import (
    AlgebraElement,
    Monomial,
    bounded_basis_monomials,
    center_degree_bounded,
    central_idempotent,
    commutator,
    conjugated_cycle_power,
    cycle_rotation_sum,
    edge,
    edge_star,
    format_element,
    format_monomial,
    generators,
    is_central,
    make_monomial,
    monomial_sort_key,
    multiply,
    normal_form,
    parse_element,
    parse_monomial,
    special_edge_choice,
    star,
    unit,
    vertex,
    zero,
)
from .center import (
    AtomSummary,
    CenterCrossCheck,
    CenterReport,
    compute_center,
    cross_check_center,
    predicted_central_elements,
)
from .graphs import (
    Cycle,
    Edge,
    Graph,
    GraphError,
    Path,
    SimplicityReport,
    SizeLimitError,
    canonical_cycle,
    cycles,
    descendants,
    exits,
    factor_graph,
    graph_to_json_dict,
    hereditary_closure,
    is_hereditary,
    is_saturated,
    is_simple_graph,
    make_path,
    ne_cycles,
    parse_graph,
    reachable_from,
    reaches,
    saturation,
    sinks,
    vertex_subset,
)
from .hereditary import (
    ArrivalSet,
    FinitaryLattice,
    annihilator,
    arrival_paths,
    classify_atom,
    double_annihilator,
    finitary_annihilator_lattice,
    is_finitary,
    lattice_join,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "ArrivalSet",
    "AtomSummary",
    "CenterCrossCheck",
    "CenterReport",
    "Cycle",
    "Edge",
    "FinitaryLattice",
    "Graph",
    "GraphError",
    "Monomial",
    "Path",
    "SimplicityReport",
    "SizeLimitError",
    "annihilator",
    "arrival_paths",
    "bounded_basis_monomials",
    "canonical_cycle",
    "center_degree_bounded",
    "central_idempotent",
    "classify_atom",
    "commutator",
    "compute_center",
    "conjugated_cycle_power",
    "cross_check_center",
    "cycle_rotation_sum",
    "cycles",
    "descendants",
    "double_annihilator",
    "edge",
    "edge_star",
    "exits",
    "factor_graph",
    "finitary_annihilator_lattice",
    "format_element",
    "format_monomial",
    "generators",
    "graph_to_json_dict",
    "hereditary_closure",
    "is_central",
    "is_finitary",
    "is_hereditary",
    "is_saturated",
    "is_simple_graph",
    "lattice_join",
    "make_monomial",
    "make_path",
    "monomial_sort_key",
    "multiply",
    "ne_cycles",
    "normal_form",
    "parse_element",
    "parse_graph",
    "parse_monomial",
    "predicted_central_elements",
    "reachable_from",
    "reaches",
    "saturation",
    "sinks",
    "special_edge_choice",
    "star",
    "unit",
    "vertex",
    "vertex_subset",
    "zero",
]
