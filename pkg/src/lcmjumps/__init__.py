"""Numerical toolkit for the vertex process of least concave majorants.

The package computes the densities, intensities, and rate constants of
the jump process traced by the majorant-touch locations of Brownian
motion with parabolic drift, simulates that process exactly from
tabulated hazards, and measures jump counts of the Grenander estimator,
whose n^(1/3) growth shares the same constants.
"""
__version__ = "0.1.0"

from .errors import AccuracyError, EnvelopeViolation
from .airy import airy_ai, airy_ai_prime, airy_zeros
from .special_fns import (g, p, p0, qfun, tilde_p, u2, phi, Phi, f_v0,
                          charfn_v0, fourier_checks, build_suite,
                          default_suite)
from .constants import (k1_airy, k1_double_integral, ev0_sq, e_max,
                        k_scaled, covariance_kernel)
from .vertex_sim import (KERNEL_IMPL, SimConfig, SimTables, VertexPath,
                         CountStats, build_sim_tables, simulate_path,
                         estimate_rates, clt_check, sample_v0,
                         sample_waiting_time, sample_jump, jump_density)
from .grenander import (TRIANGULAR, EXPONENTIAL, DecreasingDensity,
                        ConcaveMajorant, sample_sorted, lcm_empirical,
                        grenander_jump_count, theory_coefficient,
                        mc_jump_study)

__all__ = [
    "AccuracyError", "EnvelopeViolation",
    "airy_ai", "airy_ai_prime", "airy_zeros",
    "g", "p", "p0", "qfun", "tilde_p", "u2", "phi", "Phi", "f_v0",
    "charfn_v0", "fourier_checks", "build_suite", "default_suite",
    "k1_airy", "k1_double_integral", "ev0_sq", "e_max", "k_scaled",
    "covariance_kernel",
    "KERNEL_IMPL", "SimConfig", "SimTables", "VertexPath", "CountStats",
    "build_sim_tables", "simulate_path", "estimate_rates", "clt_check",
    "sample_v0", "sample_waiting_time", "sample_jump", "jump_density",
    "TRIANGULAR", "EXPONENTIAL", "DecreasingDensity", "ConcaveMajorant",
    "sample_sorted", "lcm_empirical", "grenander_jump_count",
    "theory_coefficient", "mc_jump_study",
]
