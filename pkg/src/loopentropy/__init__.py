"""Regularized one-loop entropies of real and virtual propagation states.

The library computes, in dimensional regularization around d = 4, the
entanglement, mutual-information and conditional entropies between the
external (real) and internal (virtual) states of the quartic scalar
theory's low-order correlation functions, together with the loop-integral
families, series algebra and contour coefficients they are built from.
"""

from .contour import ContourConfig, coeff_a, coeff_b, ratio_AB, ratio_ab_regulated, tau
from .entropy import (
    EntropyBreakdown,
    SpectralDensity,
    compute_quantity,
    conditional_entropies_21,
    entropy_order1_generic,
    mutual_information_21,
    order1_blocks_n2,
    plane_wave_trace,
    renyi_trace_n,
    renyi_trace_radial,
    s_ext_2_order0,
    s_ext_2_order1,
    s_ext_2_total,
    s_ext_21,
    s_int_21,
    s_nonperturbative,
    s_total_21,
    s_vacuum_order1,
    vacuum_finite_coefficient,
)
from .epsseries import EpsSeries, digamma_series, gamma_series, harmonic_series, power_series
from .errors import (
    LogCapError,
    LoopEntropyError,
    NonConvergentError,
    NonFiniteError,
    NonInvertibleLeadingTermError,
    PoleError,
    ToleranceNotMetError,
    TruncationUnderflowError,
    UnknownQuantityError,
)
from .loops import (
    LoopValue,
    SchemeParams,
    chi_closed,
    chi_over_delta_series,
    chi_series,
    delta_closed,
    delta_series,
    delta_stripped_series,
    eta,
    eta_closed_d4,
    oracle_chi_radial,
    oracle_chi_x,
    oracle_delta_radial,
)
from .specialfns import constants, digamma, gamma, harmonic, polygamma
from .traces import TraceSet, ratio_checks, tr_rho4_inferred, vacuum_trace_phi4, vacuum_trace_phir

__version__ = "0.1.0"

__all__ = [
    "ContourConfig", "EntropyBreakdown", "EpsSeries", "LoopValue",
    "SchemeParams", "SpectralDensity", "TraceSet",
    "coeff_a", "coeff_b", "ratio_AB", "ratio_ab_regulated", "tau",
    "compute_quantity", "conditional_entropies_21", "entropy_order1_generic",
    "mutual_information_21", "order1_blocks_n2", "plane_wave_trace",
    "renyi_trace_n", "renyi_trace_radial", "s_ext_2_order0", "s_ext_2_order1",
    "s_ext_2_total", "s_ext_21", "s_int_21", "s_nonperturbative", "s_total_21",
    "s_vacuum_order1", "vacuum_finite_coefficient",
    "digamma_series", "gamma_series", "harmonic_series", "power_series",
    "chi_closed", "chi_over_delta_series", "chi_series", "delta_closed",
    "delta_series", "delta_stripped_series", "eta", "eta_closed_d4",
    "oracle_chi_radial", "oracle_chi_x", "oracle_delta_radial",
    "constants", "digamma", "gamma", "harmonic", "polygamma",
    "ratio_checks", "tr_rho4_inferred", "vacuum_trace_phi4", "vacuum_trace_phir",
    "LoopEntropyError", "PoleError", "NonFiniteError", "TruncationUnderflowError",
    "NonInvertibleLeadingTermError", "LogCapError", "NonConvergentError",
    "ToleranceNotMetError", "UnknownQuantityError",
]
