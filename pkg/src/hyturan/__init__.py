"""Spectral extremal analysis for r-uniform hypergraphs.

Compute p-spectral radii and Lagrangians, generate the standard extremal
constructions, detect forbidden structures, run desk-scale extremal
searches, and audit the closed-form inequalities.
"""

from .hcore import (
    BudgetExceededError,
    CapacityError,
    EditDelta,
    Hypergraph,
    Partition,
    ValidationError,
    blow_up,
    canonical_form,
    edit_delta,
    induced_subgraph,
    intersection_lower_bound,
    is_isomorphic,
    is_k_partite,
    is_strong_independent,
    partition_score,
    transversal_number,
)
from .construct import (
    complete_k_partite,
    complete_r_graph,
    expanded_clique,
    g62,
    g62_blowup,
    g62_extremal,
    generalized_fan,
    m1_pattern,
    random_hypergraph,
    semibipartite_max,
    turan_count,
    turan_hypergraph,
    turan_partition,
)
from .spectral import (
    SolverConfig,
    SolverResult,
    WeightVector,
    evaluate_poly,
    lagrangian,
    lambda_upper_from_density,
    maclaurin_bound,
    oracle_p_spectral,
    p_spectral_radius,
    residual,
    size_upper_bound,
    turan_lower_bound,
    weyl_check,
)
from .detect import (
    Pattern,
    clique_family_core,
    contains_berge_clique,
    contains_hom,
    contains_m1,
    contains_subgraph,
    fan_family_core,
    find_pattern,
    is_free,
    is_g62_colorable,
    is_semibipartite_colorable,
    m_family_probe,
)
from .extremal import (
    KPartiteComparison,
    SearchRecord,
    StabilityReport,
    enumerate_free,
    ex_search,
    hill_climb,
    lambda_vs_kpartite_check,
    spex_search,
    stability_report,
    symmetrize,
)

__version__ = "0.1.0"
