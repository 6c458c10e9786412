"""Closed-form exponential of a general multivector.

Two formula families cover the four algebras, split by the square of the
central pseudoscalar ``I``:

* ``I**2 = +1`` (Cl(0,3), Cl(2,1)): ``(1 +- I)/2`` are central idempotents
  and the exponential splits into two halves, each a de Moivre type sum in
  the signed squares ``a+**2`` and ``a-**2``.
* ``I**2 = -1`` (Cl(3,0), Cl(1,2)): ``I`` acts as an imaginary unit and
  ``(a + A)**2 = S + 2 s I`` has the "complex" square root ``a+ + a- I``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .algebra import (
    CL03, CL12, CL21, CL30, Multivector, Signature, quadratic_scalar,
    wedge_mix_scalar, wedge_scalar,
)

# a+-**2 = 0 decision, relative to the squared max-abs input coefficient
LIMIT_EPS = 1e-12
LIMIT_FLOOR = 1e-300
# |x**2| below which si/co switch to their Taylor series
SICO_EPS = 1e-8

BRANCH_LABELS = ("trig", "hyperbolic", "limit")


class SiCo(NamedTuple):
    co: float
    si: float


@dataclass(frozen=True)
class MixingScalars:
    """Vector/bivector mixing quantities for one multivector.

    ``a_plus_sq``/``a_minus_sq`` are signed.  ``a_plus``/``a_minus`` are set
    only where the algebra defines a real root (in Cl(3,0)/Cl(1,2) ``a_minus``
    carries the sign of ``-2 I a^A``).
    """

    algebra: Signature
    a_plus_sq: float
    a_minus_sq: float
    a_plus: Optional[float] = None
    a_minus: Optional[float] = None


class ClosedExp(NamedTuple):
    value: Multivector
    mixing: MixingScalars
    branch: str


def _require(a: Multivector, *sigs: Signature) -> None:
    if a.sig not in sigs:
        names = ", ".join(str(s) for s in sigs)
        raise ValueError(f"expected a multivector of {names}, got {a.sig}")


def _limit_threshold(a: Multivector) -> float:
    c = a.coeffs
    scale = max(abs(float(x)) for x in c[1:7])
    return LIMIT_EPS * max(scale * scale, LIMIT_FLOOR)


def inner_sum(a: Multivector) -> float:
    """``a.a + A.A``."""
    return quadratic_scalar(a, 1) + quadratic_scalar(a, 2)


def _signed_squares(a: Multivector) -> tuple[float, float]:
    s = inner_sum(a)
    w = wedge_mix_scalar(a)
    return -s - 2.0 * w, -s + 2.0 * w


def sico(x_sq: float) -> SiCo:
    """``co`` and ``si`` of a signed square, trigonometric for positive argument."""
    if not math.isfinite(x_sq):
        raise ValueError(f"sico argument must be finite, got {x_sq!r}")
    if abs(x_sq) < SICO_EPS:
        return SiCo(1.0 - x_sq / 2.0 + x_sq * x_sq / 24.0,
                    1.0 - x_sq / 6.0 + x_sq * x_sq / 120.0)
    if x_sq > 0.0:
        r = math.sqrt(x_sq)
        return SiCo(math.cos(r), math.sin(r) / r)
    r = math.sqrt(-x_sq)
    return SiCo(math.cosh(r), math.sinh(r) / r)


def mixing_cl03(a: Multivector) -> MixingScalars:
    _require(a, CL03)
    plus_sq, minus_sq = _signed_squares(a)
    # both are sums of three squares; rounding may leave a tiny negative
    return MixingScalars(CL03, plus_sq, minus_sq,
                         math.sqrt(max(plus_sq, 0.0)), math.sqrt(max(minus_sq, 0.0)))


def mixing_cl21(a: Multivector) -> MixingScalars:
    _require(a, CL21)
    plus_sq, minus_sq = _signed_squares(a)
    return MixingScalars(CL21, plus_sq, minus_sq)


def mixing_cl30(a: Multivector) -> MixingScalars:
    """``a+ >= 0`` and signed ``a-`` with ``(a+ + a- I)**2 = (a + A)**2``."""
    _require(a, CL30, CL12)
    s_in = inner_sum(a)
    s = wedge_scalar(a)
    # -2 I (a^A) = 2 s because I**2 = -1 here
    num = -2.0 * wedge_mix_scalar(a)
    root_d = math.hypot(s_in, 2.0 * s)
    if s == 0.0:
        if s_in > 0.0:
            ap, am = math.sqrt(s_in), 0.0
        elif s_in < 0.0:
            ap, am = 0.0, math.sqrt(-s_in)
        else:
            ap, am = 0.0, 0.0
    elif s_in >= 0.0:
        ap = math.sqrt((s_in + root_d) / 2.0)
        am = num / (2.0 * ap)
    else:
        # S + sqrt(D) cancels for S < 0; go through |a-| instead
        am_abs = math.sqrt((root_d - s_in) / 2.0)
        am = math.copysign(am_abs, num)
        ap = abs(num) / (2.0 * am_abs)
    return MixingScalars(a.sig, ap * ap, am * am, ap, am)


def mixing(a: Multivector) -> MixingScalars:
    if a.sig == CL03:
        return mixing_cl03(a)
    if a.sig == CL21:
        return mixing_cl21(a)
    return mixing_cl30(a)


def _half_label(x_sq: float, thresh: float) -> str:
    if abs(x_sq) <= thresh:
        return "limit"
    return "trig" if x_sq > 0.0 else "hyperbolic"


def _exp_split(a: Multivector, m: MixingScalars) -> ClosedExp:
    c = a.coeffs
    a0, a123 = float(c[0]), float(c[7])
    v = a.vector_bivector
    i = Multivector.pseudoscalar(a.sig)
    thresh = _limit_threshold(a)

    def half(x_sq: float, sign: float) -> Multivector:
        if abs(x_sq) <= thresh:
            co, si = 1.0, 1.0
        else:
            co, si = sico(x_sq)
        return math.exp(sign * a123) * (si * v + co)

    plus = half(m.a_plus_sq, 1.0)
    minus = half(m.a_minus_sq, -1.0)
    # (1+I) P + (1-I) M = (P + M) + I (P - M)
    value = 0.5 * math.exp(a0) * ((plus + minus) + i * (plus - minus))
    branch = f"{_half_label(m.a_plus_sq, thresh)}/{_half_label(m.a_minus_sq, thresh)}"
    return ClosedExp(value, m, branch)


def _check_finite(a: Multivector) -> None:
    # Multivector never stores non-finite values; guard against subclasses/raw arrays
    if not all(math.isfinite(float(x)) for x in a.coeffs):
        raise ValueError("exponent has a non-finite coefficient")


def exp_cl03_detail(a: Multivector) -> ClosedExp:
    _require(a, CL03)
    _check_finite(a)
    return _exp_split(a, mixing_cl03(a))


def exp_cl21_detail(a: Multivector) -> ClosedExp:
    _require(a, CL21)
    _check_finite(a)
    return _exp_split(a, mixing_cl21(a))


def exp_cl30_cl12_detail(a: Multivector) -> ClosedExp:
    _require(a, CL30, CL12)
    _check_finite(a)
    m = mixing_cl30(a)
    c = a.coeffs
    a0, a123 = float(c[0]), float(c[7])
    i = Multivector.pseudoscalar(a.sig)
    ap, am = m.a_plus, m.a_minus
    norm_sq = m.a_plus_sq + m.a_minus_sq
    thresh = _limit_threshold(a)
    v = a.vector_bivector

    if norm_sq <= thresh:
        # (a + A)**2 = 0: the series stops after the linear term
        core = v + 1.0
        branch = "limit/limit"
    else:
        ch, sh = math.cosh(ap), math.sinh(ap)
        co, sn = math.cos(am), math.sin(am)
        lead = co * ch + (sn * sh) * i
        factor = (ch * sn - (co * sh) * i) / norm_sq
        core = lead + factor * (am * v + ap * (i * v))
        branch = ("hyperbolic" if ap > 0.0 else "limit") + "/" + \
                 ("trig" if am != 0.0 else "limit")
    phase = math.exp(a0) * (math.cos(a123) + math.sin(a123) * i)
    return ClosedExp(phase * core, m, branch)


def exp_cl03(a: Multivector) -> Multivector:
    return exp_cl03_detail(a).value


def exp_cl21(a: Multivector) -> Multivector:
    return exp_cl21_detail(a).value


def exp_cl30_cl12(a: Multivector) -> Multivector:
    return exp_cl30_cl12_detail(a).value


def exp_closed_detail(a: Multivector) -> ClosedExp:
    """Exponential with the mixing scalars and the branch that was taken."""
    if a.sig == CL03:
        return exp_cl03_detail(a)
    if a.sig == CL21:
        return exp_cl21_detail(a)
    return exp_cl30_cl12_detail(a)


def exp_closed(a: Multivector) -> Multivector:
    return exp_closed_detail(a).value
