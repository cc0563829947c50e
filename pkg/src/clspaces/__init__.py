"""CL-spaces with absolute norms, their Reisner graphs, and peak polynomials."""

from .analysis import (
    INDEX_ONE,
    NOT_INDEX_ONE,
    complex_extreme_test,
    frechet_probe,
    index_one_classify,
    lee_condition_check,
    numerical_radius_lower,
    perturbation_step,
    strongly_attaining_points,
    upper_monotonicity_test,
    vector_poly_norm_estimate,
    verify_attainment,
)
from .clspace import (
    COMPLEX,
    REAL,
    CLReport,
    CLSpace,
    NotCLSpaceError,
    dual_extreme_points,
    dual_norm,
    ell1,
    ell_infty,
    extreme_points,
    graph_of_norm,
    nonnegative_extreme_points,
    norm,
    reisner_check,
    space_from_graph,
    space_from_json,
)
from .graph_core import (
    Graph,
    GraphError,
    SizeLimitError,
    chromatic_number,
    clique_number,
    complement,
    graph_from_json,
    is_perfect,
    make_graph,
    maximal_cliques,
    maximal_stable_sets,
)
from .numerics import Ball, Slice, conv_membership, maximize
from .poly import HomPoly, build_Q, evaluate, poly_from_json, q_lemma

__all__ = [
    "Ball",
    "build_Q",
    "chromatic_number",
    "clique_number",
    "CLReport",
    "CLSpace",
    "complement",
    "COMPLEX",
    "complex_extreme_test",
    "conv_membership",
    "dual_extreme_points",
    "dual_norm",
    "ell1",
    "ell_infty",
    "evaluate",
    "extreme_points",
    "frechet_probe",
    "Graph",
    "graph_from_json",
    "graph_of_norm",
    "GraphError",
    "HomPoly",
    "INDEX_ONE",
    "index_one_classify",
    "is_perfect",
    "lee_condition_check",
    "make_graph",
    "maximal_cliques",
    "maximal_stable_sets",
    "maximize",
    "nonnegative_extreme_points",
    "norm",
    "NOT_INDEX_ONE",
    "NotCLSpaceError",
    "numerical_radius_lower",
    "perturbation_step",
    "poly_from_json",
    "q_lemma",
    "REAL",
    "reisner_check",
    "SizeLimitError",
    "Slice",
    "space_from_graph",
    "space_from_json",
    "strongly_attaining_points",
    "upper_monotonicity_test",
    "vector_poly_norm_estimate",
    "verify_attainment",
]
