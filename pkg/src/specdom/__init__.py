"""Exact toolkit for minimizing the spectral radius over connected graphs
with domination number floor(n/2).

Everything spectral is certified: characteristic polynomials are integer,
radius enclosures carry Sturm-counted rational bounds, and comparisons
resolve exactly. The verify module re-derives each catalogued claim from
scratch and emits deterministic JSON-lines reports.
"""

from .config import RunConfig, parse_rational
from .domination import (
    DominationCertificate,
    all_minimum_dominating_sets,
    complement_dominates,
    dominating_set_with_supports,
    gamma_exact,
    gamma_starlike_formula,
    gamma_tree,
    is_dominating_set,
    ore_bound_check,
    tree_domination_number,
    tree_has_perfect_matching,
)
from .enumeration import (
    SearchResult,
    TreeClassFilter,
    connected_graphs_labeled,
    filter_class,
    find_minimizer,
    free_trees,
)
from .errors import (
    DomainError,
    InvalidArgumentError,
    ResourceLimitError,
    SpecdomError,
)
from .fastscan import labeled_class_survivors
from .graphs import (
    CaterpillarSpec,
    Graph,
    TreeWitness,
    build_complete,
    build_corona,
    build_cycle,
    build_fig8_tree,
    build_H,
    build_path,
    build_S10,
    build_star,
    build_starlike,
    build_T,
    build_Wn,
    diameter,
    from_graph6,
    is_caterpillar,
    is_connected,
    is_tree,
    max_degree,
    max_leaf_multiplicity,
    support_vertices,
    to_graph6,
)
from .isomorphism import canonical_graph6, is_isomorphic, trees_isomorphic
from .polynomials import IntPolynomial, frac_str, parse_frac, sturm_count
from .spectral import (
    Ordering,
    RadiusEnclosure,
    char_poly,
    char_poly_tree,
    compare_enclosures,
    compare_rho,
    corona_poly,
    corona_radius,
    refine_enclosure,
    spectral_radius,
)
from .verify import VerificationReport, run_all, run_claim

__version__ = "0.1.0"

__all__ = [
    "CaterpillarSpec",
    "DomainError",
    "DominationCertificate",
    "Graph",
    "IntPolynomial",
    "InvalidArgumentError",
    "Ordering",
    "RadiusEnclosure",
    "ResourceLimitError",
    "RunConfig",
    "SearchResult",
    "SpecdomError",
    "TreeClassFilter",
    "TreeWitness",
    "VerificationReport",
    "all_minimum_dominating_sets",
    "build_H",
    "build_S10",
    "build_T",
    "build_Wn",
    "build_complete",
    "build_corona",
    "build_cycle",
    "build_fig8_tree",
    "build_path",
    "build_star",
    "build_starlike",
    "canonical_graph6",
    "char_poly",
    "char_poly_tree",
    "compare_enclosures",
    "compare_rho",
    "complement_dominates",
    "connected_graphs_labeled",
    "corona_poly",
    "corona_radius",
    "diameter",
    "dominating_set_with_supports",
    "filter_class",
    "find_minimizer",
    "frac_str",
    "free_trees",
    "from_graph6",
    "gamma_exact",
    "gamma_starlike_formula",
    "gamma_tree",
    "is_caterpillar",
    "is_connected",
    "is_dominating_set",
    "is_isomorphic",
    "is_tree",
    "labeled_class_survivors",
    "max_degree",
    "max_leaf_multiplicity",
    "ore_bound_check",
    "parse_frac",
    "parse_rational",
    "refine_enclosure",
    "run_all",
    "run_claim",
    "spectral_radius",
    "sturm_count",
    "support_vertices",
    "to_graph6",
    "tree_domination_number",
    "tree_has_perfect_matching",
    "trees_isomorphic",
]
