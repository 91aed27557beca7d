"""Correlation measures for bipartite quantum states.

Builds density matrices, maximizes the mutual information of local
measurement records, compares it against the quantum mutual information
and discord-style measures, and checks the complementarity bounds that
cap what any set of unbiased measurements can extract.
"""
from .bounds import (
    BoundReport,
    MubFamily,
    entropic_sum,
    entropic_sum_bound,
    mub_family,
    mub_information_report,
    mub_total_bound,
    purity_total_bound,
    state_independent_bound,
    two_mub_bound,
)
from .dqc1 import (
    Dqc1Model,
    Dqc1Point,
    TraceEstimate,
    build_explicit_state,
    dqc1_max_record_mi,
    dqc1_max_record_mi_numeric,
    dqc1_nonclassicality,
    dqc1_quantum_mi,
    dqc1_record_mi,
    dqc1_scan,
    exact_normalized_trace,
    trace_estimate,
)
from .linalg import (
    DensityMatrix,
    DimensionMismatchError,
    InvalidStateError,
    UnsupportedDimensionError,
    as_rng,
    binary_entropy,
    fourier_matrix,
    hermitian_eigen,
    load_state,
    partial_trace,
    purity,
    random_density_matrix,
    random_unitary,
    save_state,
    shannon_entropy,
    swap_sides,
    tensor_product,
    von_neumann_entropy,
)
from .measures import (
    CorrelationReport,
    DiscordResult,
    EigenbasisMi,
    HolevoSearchResult,
    JointDistribution,
    MiSearchResult,
    Povm,
    ProjectiveBasis,
    classical_correlation_a,
    classical_mutual_info,
    conditional_states_b,
    discord_a,
    discord_b,
    full_report,
    i_eigenbasis,
    i_eigenbasis_scan,
    joint_distribution,
    maximize_mi_povm,
    maximize_mi_projective,
    measurement_induced_disturbance,
    quantum_mutual_info,
)
from .optimize import OptimizerConfig, SearchResult, multistart_minimize
from .states import (
    FamilyAnalytics,
    LockingReport,
    bell_diagonal_analytics,
    bell_diagonal_probs,
    bell_diagonal_state,
    biorthogonal_state,
    classical_quantum_state,
    correlation_tensor_state,
    locking_demo,
    locking_state,
    sigma_locking_state,
    trine_bloch_vectors,
    trine_povm_optimum,
    trine_projective_grid,
    trine_state,
    werner_analytics,
    werner_state,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CorrelationReport",
    "DensityMatrix",
    "DimensionMismatchError",
    "DiscordResult",
    "Dqc1Model",
    "Dqc1Point",
    "EigenbasisMi",
    "FamilyAnalytics",
    "HolevoSearchResult",
    "InvalidStateError",
    "JointDistribution",
    "LockingReport",
    "MiSearchResult",
    "MubFamily",
    "OptimizerConfig",
    "Povm",
    "ProjectiveBasis",
    "SearchResult",
    "TraceEstimate",
    "UnsupportedDimensionError",
    "as_rng",
    "bell_diagonal_analytics",
    "bell_diagonal_probs",
    "bell_diagonal_state",
    "binary_entropy",
    "biorthogonal_state",
    "build_explicit_state",
    "classical_correlation_a",
    "classical_mutual_info",
    "classical_quantum_state",
    "conditional_states_b",
    "correlation_tensor_state",
    "discord_a",
    "discord_b",
    "dqc1_max_record_mi",
    "dqc1_max_record_mi_numeric",
    "dqc1_nonclassicality",
    "dqc1_quantum_mi",
    "dqc1_record_mi",
    "dqc1_scan",
    "entropic_sum",
    "entropic_sum_bound",
    "exact_normalized_trace",
    "fourier_matrix",
    "full_report",
    "hermitian_eigen",
    "i_eigenbasis",
    "i_eigenbasis_scan",
    "joint_distribution",
    "load_state",
    "locking_demo",
    "locking_state",
    "maximize_mi_povm",
    "maximize_mi_projective",
    "measurement_induced_disturbance",
    "mub_family",
    "mub_information_report",
    "mub_total_bound",
    "multistart_minimize",
    "partial_trace",
    "purity",
    "purity_total_bound",
    "quantum_mutual_info",
    "random_density_matrix",
    "random_unitary",
    "save_state",
    "shannon_entropy",
    "sigma_locking_state",
    "state_independent_bound",
    "swap_sides",
    "tensor_product",
    "trace_estimate",
    "trine_bloch_vectors",
    "trine_povm_optimum",
    "trine_projective_grid",
    "trine_state",
    "two_mub_bound",
    "von_neumann_entropy",
    "werner_analytics",
    "werner_state",
]
