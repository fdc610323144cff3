"""Continuous-time quantum walk on dihedral Cayley graphs.

Exact closed-form dynamics and time averages, the classical random walk
on the same graph, reciprocal eigenvalue-gap sums with their analytic
caps, and a measurement-based sampler.  The `qwalk` console script
fronts all of it.
"""

from .bounds import (
    BoundsReport,
    BudgetReport,
    ConjectureRow,
    DecomposedSum,
    IndexSets,
    QuadrantSums,
    WithinBranchSums,
    bounds_report,
    budget_check,
    budget_report,
    budget_time,
    case5_sums,
    conjecture_check,
    conjecture_f,
    decomposed_sum,
    eigengap_inverse_sum_bruteforce,
    index_sets,
    quantum_bound_rhs,
    quantum_mixing_threshold,
    su3_raw,
    su_sums,
)
from .classical import (
    MixingReport,
    classical_mixing_time,
    classical_power,
    classical_profile,
    contraction_check,
    half_uniform_distance,
    induced_one_norm_distance,
    max_pairwise_column_distance,
    one_norm_distance,
    submultiplicativity_check,
    uniform_matrix,
)
from .dihedral import (
    CayleyGraph,
    DihedralElement,
    cayley_graph,
    elements,
    generators,
    identity,
    mul,
    normalized_adjacency,
    phi,
    phi_inverse,
    semi_cayley_adjacency,
)
from .sampling import (
    SampleHistogram,
    SamplerConfig,
    empirical_check,
    measured_walk,
    single_measured_step,
)
from .spectra import (
    classical_lower_bound,
    classical_lower_bound_relaxed,
    eigenvalue,
    eigenvalues,
    eigenvector,
    eigenvector_component,
    full_spectrum,
    second_largest_eigenvalue,
)
from .walk import (
    AveragedWalkMatrix,
    LimitingDistribution,
    amplitude,
    averaged_entry,
    averaged_matrix,
    convergence_to_limit,
    distance_to_limit,
    limiting_distribution,
    probability,
    probability_matrix,
    probability_row,
    propagator_oracle,
)

__version__ = "0.1.0"
