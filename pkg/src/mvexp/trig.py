"""Hyperbolic and trigonometric functions of a multivector argument."""
from __future__ import annotations

from typing import Optional

from .algebra import Multivector
from .closed import exp_closed
from .series import DEFAULT_CONFIG, SeriesConfig, SeriesConvergenceError, scaling_exponent


def cosh_mv(a: Multivector) -> Multivector:
    return (exp_closed(a) + exp_closed(-a)) / 2.0


def sinh_mv(a: Multivector) -> Multivector:
    return (exp_closed(a) - exp_closed(-a)) / 2.0


def cosh_sinh_mv(a: Multivector) -> tuple[Multivector, Multivector]:
    ep, em = exp_closed(a), exp_closed(-a)
    return (ep + em) / 2.0, (ep - em) / 2.0


def cos_sin_series(a: Multivector, cfg: Optional[SeriesConfig] = None
                   ) -> tuple[Multivector, Multivector]:
    """Even and odd parts of the series of ``exp(i a)``, scaled then doubled.

    The argument is halved ``k`` times, both series are summed together
    and the results are brought back with ``sin 2x = 2 sin x cos x`` and
    ``cos 2x = cos^2 x - sin^2 x``.
    """
    cfg = cfg or DEFAULT_CONFIG
    k = scaling_exponent(a, cfg.scale_threshold)
    x = a / 2.0 ** k
    neg_x2 = -(x * x)
    c_term = Multivector.scalar(a.sig, 1.0)
    s_term = x
    cos_sum, sin_sum = c_term, s_term
    small_run = 0
    correction = float("inf")
    for n in range(1, cfg.max_terms + 1):
        c_term = c_term * (neg_x2 / ((2 * n - 1) * (2 * n)))
        s_term = s_term * (neg_x2 / ((2 * n) * (2 * n + 1)))
        cos_sum = cos_sum + c_term
        sin_sum = sin_sum + s_term
        correction = max(c_term.max_abs(), s_term.max_abs())
        small_run = small_run + 1 if correction < cfg.target_tol else 0
        if small_run >= 2:
            break
    else:
        raise SeriesConvergenceError(
            f"cos/sin series did not converge in {cfg.max_terms} terms", correction)
    for _ in range(k):
        cos_sum, sin_sum = cos_sum * cos_sum - sin_sum * sin_sum, 2.0 * (sin_sum * cos_sum)
    return cos_sum, sin_sum


def cos_sin_mv(a: Multivector, cfg: Optional[SeriesConfig] = None
               ) -> tuple[Multivector, Multivector]:
    if a.sig.pseudoscalar_square == -1:
        # I behaves as the imaginary unit: cos a = cosh(I a), sin a = sinh(I a) / I
        i = Multivector.pseudoscalar(a.sig)
        ch, sh = cosh_sinh_mv(i * a)
        return ch, sh * -i
    return cos_sin_series(a, cfg)


def cos_mv(a: Multivector, cfg: Optional[SeriesConfig] = None) -> Multivector:
    return cos_sin_mv(a, cfg)[0]


def sin_mv(a: Multivector, cfg: Optional[SeriesConfig] = None) -> Multivector:
    return cos_sin_mv(a, cfg)[1]


FUNCTIONS = {
    "cosh": lambda a, cfg=None: cosh_mv(a),
    "sinh": lambda a, cfg=None: sinh_mv(a),
    "cos": cos_mv,
    "sin": sin_mv,
}


def uses_series(name: str, a: Multivector) -> bool:
    return name in ("cos", "sin") and a.sig.pseudoscalar_square == 1
