"""Interval subdivisions of simplicial complexes: f- and h-vector transforms,
type-B j-Eulerian polynomials, exact real-rootedness tests and spectral limits.
"""
from .analysis import (CharneyDavis, analysis_report, charney_davis_check, compatibility_probe,
                       count_real_roots, is_log_concave, is_real_rooted, is_unimodal,
                       square_free_part, sturm_chain)
from .complex import (FVector, HVector, SimplicialComplex, euler_characteristic, f_from_h,
                      f_vector, h_from_f, h_polynomial, is_reciprocal, parse_facets,
                      serialize_facets)
from .errors import MalformedInput, NumericError, UnsupportedMethod
from .linalg import IntMatrix
from .polynomial import IntPolynomial, e_r
from .signed import (SignedPermutation, a_poly, b_poly, bminus_poly, bplus_poly,
                     descent_count_B, enumerate_B, t_poly)
from .spectral import (eigenvector_structure_check, expected_spectrum, f_polynomial, iterate_f,
                       limit_convergence_report, verify_spectrum)
from .subdivision import (Interval, chain_count_Q, enumerate_intervals, f_interval,
                          f_interval_stirling, interval_complex)
from .transforms import f_matrix, h_interval, h_matrix, h_matrix_inverse, r_matrix

__version__ = "0.1.0"
