"""Exact construction and certification of critical polynomials arising as
Mellin transforms of Gegenbauer and Chebyshev functions."""

from .arithprops import (catalan, divisibility_characterization,
                         odd_factor_check, reduced_odd_forms, triangle)
from .construct import (CriticalPolynomial, MellinClosedForm,
                        NormalizedRational, mellin_T_closed, mellin_closed,
                        p_beta, p_chebyshev_recursive, p_hyp, p_s21_chebyshev,
                        p_s32, p_s41, q_rational)
from .errors import CritPolyError
from .poly import Poly, RatFun
from .quadrature import (QuadResult, genfun_check, quad_mellin_T,
                         quad_mellin_gegenbauer)
from .verify import Certificate, certify_critical_line

__all__ = [
    "Certificate", "CritPolyError", "CriticalPolynomial", "MellinClosedForm",
    "NormalizedRational", "Poly", "QuadResult", "RatFun", "catalan",
    "certify_critical_line", "divisibility_characterization", "genfun_check",
    "mellin_T_closed", "mellin_closed", "odd_factor_check", "p_beta",
    "p_chebyshev_recursive", "p_hyp", "p_s21_chebyshev", "p_s32", "p_s41",
    "q_rational", "quad_mellin_T", "quad_mellin_gegenbauer",
    "reduced_odd_forms", "triangle",
]

__version__ = "0.1.0"
