"""Tools for nonnegative inverse eigenvalue problems: necessary-condition
checks, complete low-dimensional deciders, checkable sufficient conditions,
certified matrix constructions, single-eigenvalue region queries,
bipartite-graph decisions and zero-padding analysis."""

from .augment import (
    AugmentReport,
    check_bh_hypotheses,
    check_extended_trace,
    check_strict_perron,
    extended_trace_from_moments,
    min_zeros_for_necessary,
    nonzero_spectrum_realizable,
)
from .conditions import (
    CheckConfig,
    NecessaryResult,
    check_cl,
    check_jll,
    check_lm_refined,
    check_moments,
    check_newton_h,
    check_perron,
    check_reality,
    check_taamp,
    check_trace,
    run_all_necessary,
    run_all_necessary_from_moments,
)
from .construct import (
    RealizationCertificate,
    direct_sum,
    hadamard,
    pi3_barycentric,
    realize_auto,
    realize_circulant_n3,
    realize_companion,
    realize_hadamard_suleimanova,
    spectracone_contains,
    verify_realization,
)
from .deciders import (
    DiagonalSpec,
    decide_coeff_gap,
    decide_diag_n3,
    decide_niep_n3,
    decide_rniep_n_le4,
    decide_sniep_n5_gated,
    decide_sym_diag_n3,
    decide_trace0_n4,
    decide_trace0_n5,
    decide_trace0_sniep_n5,
)
from .errors import (
    ConstructionError,
    DimensionMismatch,
    EmptyInput,
    InvalidParameter,
    NiepError,
    NotBipartite,
    NotCompanionNonnegative,
    NotSuleimanova,
    OutsidePi3,
    UnpairedConjugate,
    WrongDimension,
)
from .graphs import (
    UndirectedGraph,
    bipartition,
    decide_bipartite_sniep,
    matching_number,
    path_graph,
    star_graph,
)
from .regions import (
    dd_karpelevich_necessary,
    in_perfect_mirsky,
    in_pi_k,
    kellogg_stephens_bound,
    roots_of_unity,
    theta3_membership,
)
from .reports import ConditionReport, ConditionVerdict, Decision, DecisionVerdict, Witness
from .spectrum import (
    DEFAULT_TOL,
    Moments,
    MonicPolynomialCoeffs,
    Spectrum,
    SymmetricFunctions,
    charpoly_of_matrix,
    coeffs_from_moments,
    coeffs_from_spectrum,
    elementary_symmetric,
    moments,
    moments_from_coeffs,
    moments_of_matrix,
    validate_spectrum,
)
from .sufficient import (
    BaseRealization,
    Partition,
    check_perfect2,
    check_suleimanova,
    check_suleimanova_perfect,
)

__version__ = "0.1.0"
