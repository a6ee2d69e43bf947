"""Exact computation of equivariant Casson invariants and knot signatures."""

from .braid import (BraidWord, closure_component_count, cork_branch_knot,
                    seifert_matrix_of_closure, torus_knot, torus_knot_matrix)
from .casson import (BrieskornTriple, SurgerySpec, casson_brieskorn,
                     casson_surgery, rohlin_from_casson, rohlin_surgery)
from .equivariant import (EquivariantReport, arf_cover_check,
                          boyer_lines_lambda_bar, boyer_nicas,
                          eq_casson_branched, eq_casson_free,
                          equivariant_report, floer_lefschetz,
                          hypothesis_flags, lambda_tau, mu_bar,
                          rohlin_reduction_check, seifert_lefschetz_check,
                          tau_grading_sign)
from .errors import EqCassonError
from .laurent import (GaloisReport, LaurentPoly, NormalizedKnotPoly,
                      cover_h1_order, fox_cover_polynomial, galois_check,
                      levine_arf, normalize, second_derivative_at_one)
from .pillowcase import (PCArc, PCPoint, PillowcaseCurve, decomposition_check,
                         intersect_circle, intersect_line,
                         line_count_as_invariant, torus_knot_curve)
from .seifert import (SeifertMatrix, alexander, alexander_second_derivative,
                      arf, mirror, random_seifert_matrix, signature_sum,
                      tl_signature, total_signature)
from .verify import VerifyReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "BraidWord", "BrieskornTriple", "EqCassonError", "EquivariantReport",
    "GaloisReport", "LaurentPoly", "NormalizedKnotPoly", "PCArc", "PCPoint",
    "PillowcaseCurve", "SeifertMatrix", "SurgerySpec", "VerifyReport",
    "alexander", "alexander_second_derivative", "arf", "arf_cover_check",
    "boyer_lines_lambda_bar", "boyer_nicas", "casson_brieskorn",
    "casson_surgery", "closure_component_count", "cork_branch_knot",
    "cover_h1_order", "decomposition_check", "eq_casson_branched",
    "eq_casson_free", "equivariant_report", "floer_lefschetz",
    "fox_cover_polynomial", "galois_check", "hypothesis_flags",
    "intersect_circle", "intersect_line", "lambda_tau", "levine_arf",
    "line_count_as_invariant", "mirror", "mu_bar", "normalize",
    "random_seifert_matrix", "rohlin_from_casson", "rohlin_reduction_check",
    "rohlin_surgery", "run_suite", "second_derivative_at_one",
    "seifert_lefschetz_check", "seifert_matrix_of_closure", "signature_sum",
    "tau_grading_sign", "tl_signature", "torus_knot", "torus_knot_curve",
    "torus_knot_matrix", "total_signature",
]
