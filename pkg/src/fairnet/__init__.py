"""Decide whether a graph is fair for a label multiset, with certificates.

A graph G is fair for a multiset S of positive integers when some bijection
from vertices to S gives every vertex with at least one neighbor the same
neighborhood sum.  The package provides the decision procedures, certificate
verification, hard-instance generators, and a canonical file format.
"""

from .build import (
    complete_bipartite,
    cycle_graph,
    disjoint_union,
    empty_graph,
    path_graph,
    star_graph,
)
from .ilp import Constraint, IntegerProgram, IntVar, IpSolution, solve_feasible
from .instance_io import Instance, read_instance, write_instance
from .model import (
    VACUOUS,
    FairnessCertificate,
    FairnetError,
    Graph,
    InputError,
    LabelMultiset,
    RefusalError,
    SolveOutcome,
    SolveStats,
    Verdict,
    fairness_constant_candidates,
    neighborhood_sum,
    verify,
)
from .reductions import (
    GeneratedInstance,
    SemiMagicSpec,
    ThreePartitionInstance,
    XsatFormula,
    brute_3partition,
    certificate_from_xsat_assignment,
    decode_semimagic,
    gen_3partition_k33,
    gen_3partition_stars,
    gen_circulant,
    gen_semimagic,
    gen_xsat,
    validate_xsat,
)
from .solvers import (
    SolverChoice,
    StrategyTag,
    oracle_constants,
    parameter_report,
    solve_auto,
    solve_fvs_alpha_delta,
    solve_oracle,
    solve_regular_fvs,
    solve_vc_alpha,
    solve_vc_delta,
)
from .special import (
    enumerate_boundary_extensions,
    extend_forest,
    solve_cycle,
    solve_disjoint_stars,
    solve_single_star,
    star_decomposition,
)
from .structure import (
    Shape,
    ShapeReport,
    classify,
    connected_components,
    minimum_feedback_vertex_set,
    minimum_vertex_cover,
    twin_classes,
)

__version__ = "0.1.0"

__all__ = [
    "VACUOUS",
    "Constraint",
    "FairnessCertificate",
    "FairnetError",
    "GeneratedInstance",
    "Graph",
    "InputError",
    "Instance",
    "IntVar",
    "IntegerProgram",
    "IpSolution",
    "LabelMultiset",
    "RefusalError",
    "SemiMagicSpec",
    "Shape",
    "ShapeReport",
    "SolveOutcome",
    "SolveStats",
    "SolverChoice",
    "StrategyTag",
    "ThreePartitionInstance",
    "Verdict",
    "XsatFormula",
    "brute_3partition",
    "certificate_from_xsat_assignment",
    "classify",
    "complete_bipartite",
    "connected_components",
    "cycle_graph",
    "decode_semimagic",
    "disjoint_union",
    "empty_graph",
    "enumerate_boundary_extensions",
    "extend_forest",
    "fairness_constant_candidates",
    "gen_3partition_k33",
    "gen_3partition_stars",
    "gen_circulant",
    "gen_semimagic",
    "gen_xsat",
    "neighborhood_sum",
    "oracle_constants",
    "parameter_report",
    "path_graph",
    "read_instance",
    "solve_auto",
    "solve_cycle",
    "solve_disjoint_stars",
    "solve_feasible",
    "solve_fvs_alpha_delta",
    "solve_oracle",
    "solve_regular_fvs",
    "solve_single_star",
    "solve_vc_alpha",
    "solve_vc_delta",
    "star_decomposition",
    "minimum_feedback_vertex_set",
    "minimum_vertex_cover",
    "twin_classes",
    "validate_xsat",
    "verify",
    "write_instance",
]
