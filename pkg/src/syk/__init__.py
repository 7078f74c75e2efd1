"""Exact symbolic computation in the super Yangian of gl(M|N)."""

from .algebra import Algebra, Element, Signature
from .series import OutOfKnownRange, Series, bracket_series, times_var_diff
from .gauss import (Composition, GaussData, MatrixSeries, check_gauss,
                    check_gauss_inverse, compositions_of, format_composition,
                    gauss, matrix_invert, parse_composition)
from .morphisms import (Morphism, check_defining_relations, check_involution,
                        check_routes_agree, identity_map, omega, psi,
                        psi_direct, rho, zeta, zeta_direct)
from .verify import (FamilyResult, VerifyReport, WrongShape, default_workers,
                     verify_all, verify_block_even, verify_lemma72, verify_levi,
                     verify_m2n1, verify_mn11, verify_suite, verify_theorem73)
from .pbw import (DegreeExceeded, LoopAlgebra, PbwMonomial, enumerate_pbw,
                  expand_pbw, gr_bracket_check, gr_image, independence_check,
                  spanning_check)

__version__ = "0.1.0"

__all__ = [
    "Algebra", "Element", "Signature",
    "OutOfKnownRange", "Series", "bracket_series", "times_var_diff",
    "Composition", "GaussData", "MatrixSeries", "check_gauss",
    "check_gauss_inverse", "compositions_of", "format_composition", "gauss",
    "matrix_invert", "parse_composition",
    "Morphism", "check_defining_relations", "check_involution",
    "check_routes_agree", "identity_map", "omega", "psi", "psi_direct",
    "rho", "zeta", "zeta_direct",
    "FamilyResult", "VerifyReport", "WrongShape", "default_workers",
    "verify_all", "verify_block_even", "verify_lemma72", "verify_levi",
    "verify_m2n1", "verify_mn11", "verify_suite", "verify_theorem73",
    "DegreeExceeded", "LoopAlgebra", "PbwMonomial", "enumerate_pbw",
    "expand_pbw", "gr_bracket_check", "gr_image", "independence_check",
    "spanning_check",
]
