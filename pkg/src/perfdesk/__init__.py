"""Exact arithmetic for desk-scale period computations.

Everything here is exact: rational valuations, cyclotomic integer series,
Hahn-series coefficient fields, Witt vectors and tail-certified period
ring elements. No floats enter any computation path.
"""

from .errors import (ConsistencyError, DomainError, InversionError,
                     PrecisionError, RangeError, UsageError)
from .numkit import Fq, FqElt, INF, PadicInt, Rat, embedding_degree, is_prime
from .cyclo_series import CycloInt, CycloLaurent
from .tate_theta import (ThetaSeries, TorsionPoint, discriminant_series,
                         quasi_periodicity_residual, theta_eval,
                         theta_value_ratio, theta_value_table, xi_valuation,
                         zeta_2ell_point, zeta_ell_point)
from .tilt import HahnElt, TiltAut, apply_aut, v_F
from .witt import (WittPolySet, WittVec, derive_witt_polys, ghost,
                   teichmuller, witt_add, witt_digits_of_int, witt_mul,
                   witt_neg, witt_sub, witt_zero)
from .bring import (BElt, NormExp, Rho, belt_add, belt_mul, eta_valuation,
                    log_teich, norm_exp, phi_eigen_check,
                    phi_eigen_residual, teich, teich_minus_one)
from .ansatz import (SigmaPoint, act, canonical_point, make_sigma_point,
                     scalar_valuation, special_point_thm10,
                     valuation_profile)
from .pilot import (BoundReport, ThetaTildeSample, build_theta_tilde_sample,
                    corollary_c_check, lift_theta_value, lower_bound_check,
                    pilot_sum, sum_of_squares, sup_with_tau,
                    trivial_upper_bound_check)
from .loglink import (PadicSeries, artin_hasse, artin_hasse_integral_degree,
                      diagram_check, formal_group_law, log_series,
                      lubin_tate_log, padic_log_unit,
                      series_compositional_inverse)

__version__ = "0.1.0"

__all__ = [
    "BElt", "BoundReport", "ConsistencyError", "CycloInt", "CycloLaurent",
    "DomainError", "Fq", "FqElt", "HahnElt", "INF", "InversionError",
    "NormExp", "PadicInt", "PadicSeries", "PrecisionError",
    "RangeError", "Rat", "Rho", "SigmaPoint", "ThetaSeries",
    "ThetaTildeSample", "TiltAut", "TorsionPoint", "UsageError",
    "WittPolySet", "WittVec", "act", "apply_aut", "artin_hasse",
    "artin_hasse_integral_degree", "belt_add", "belt_mul",
    "build_theta_tilde_sample", "canonical_point", "corollary_c_check",
    "derive_witt_polys", "diagram_check", "discriminant_series",
    "embedding_degree", "eta_valuation", "formal_group_law", "ghost",
    "is_prime", "lift_theta_value", "log_series", "log_teich",
    "lower_bound_check", "lubin_tate_log", "make_sigma_point", "norm_exp",
    "padic_log_unit", "phi_eigen_check", "phi_eigen_residual", "pilot_sum",
    "quasi_periodicity_residual", "scalar_valuation",
    "series_compositional_inverse", "special_point_thm10", "sum_of_squares",
    "sup_with_tau", "teich", "teich_minus_one", "teichmuller",
    "theta_eval", "theta_value_ratio", "theta_value_table",
    "trivial_upper_bound_check", "v_F", "valuation_profile", "witt_add",
    "witt_digits_of_int", "witt_mul", "witt_neg", "witt_sub", "witt_zero",
    "xi_valuation", "zeta_2ell_point", "zeta_ell_point",
]
