"""Closed-form exponentials of general multivectors in Cl(0,3), Cl(3,0), Cl(1,2), Cl(2,1)."""
from .algebra import (
    CL03, CL12, CL21, CL30, SIGNATURES, InvolutionKind, Multivector, Signature,
    SignatureMismatchError, SingularMultivectorError, determinant, geometric_product,
    grade_project, involution, inverse, quadratic_scalar, wedge_mix_scalar,
)
from .closed import (
    MixingScalars, SiCo, exp_cl03, exp_cl21, exp_cl30_cl12, exp_closed,
    exp_closed_detail, mixing, mixing_cl03, mixing_cl21, mixing_cl30, sico,
)
from .series import SeriesConfig, SeriesConvergenceError, exp_horner, exp_series_scaled
from .textio import ParseError, format_multivector, parse_multivector
from .trig import cos_mv, cosh_mv, sin_mv, sinh_mv

__version__ = "0.1.0"

__all__ = [
    "CL03", "CL12", "CL21", "CL30", "SIGNATURES", "InvolutionKind", "Multivector", "Signature",
    "SignatureMismatchError", "SingularMultivectorError", "determinant", "geometric_product",
    "grade_project", "involution", "inverse", "quadratic_scalar", "wedge_mix_scalar",
    "MixingScalars", "SiCo", "exp_cl03", "exp_cl21", "exp_cl30_cl12", "exp_closed",
    "exp_closed_detail", "mixing", "mixing_cl03", "mixing_cl21", "mixing_cl30", "sico",
    "SeriesConfig", "SeriesConvergenceError", "exp_horner", "exp_series_scaled",
    "ParseError", "format_multivector", "parse_multivector",
    "cos_mv", "cosh_mv", "sin_mv", "sinh_mv",
]
