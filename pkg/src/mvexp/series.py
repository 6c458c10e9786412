"""Truncated-series exponential, used as an independent oracle.

``exp_horner`` is the nested (Horner) truncation of fixed degree.
``exp_series_scaled`` picks ``m = 2**k`` so that ``A/m`` is small, sums the
power series of ``A/m`` by forward accumulation of the terms
``(A/m)**n / n!`` and squares the result ``k`` times.  The change added by
each term is the convergence measure; two consecutive changes below
``target_tol`` are required because the partial sums do not settle
monotonically.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .algebra import Multivector


class SeriesConvergenceError(ArithmeticError):
    def __init__(self, message: str, correction: float):
        super().__init__(message)
        self.correction = correction


@dataclass(frozen=True)
class SeriesConfig:
    max_terms: int = 200
    target_tol: float = 1e-16
    scale_threshold: float = 1.0

    def __post_init__(self):
        if self.max_terms < 1:
            raise ValueError("max_terms must be >= 1")
        if not self.target_tol > 0:
            raise ValueError("target_tol must be positive")
        if not self.scale_threshold > 0:
            raise ValueError("scale_threshold must be positive")


DEFAULT_CONFIG = SeriesConfig()


class SeriesResult(NamedTuple):
    value: Multivector
    terms: int
    squarings: int
    last_correction: float


def exp_horner(a: Multivector, n: int) -> Multivector:
    """Degree-``n`` Taylor polynomial of ``exp(a)`` in nested form."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    b = Multivector.scalar(a.sig, 1.0)
    for s in range(n, 0, -1):
        b = b * (a / s) + 1.0
    return b


def scaling_exponent(a: Multivector, threshold: float) -> int:
    """Smallest ``k >= 0`` with ``max|a| / 2**k <= threshold``."""
    size = a.max_abs()
    if size <= threshold:
        return 0
    k = max(0, math.ceil(math.log2(size / threshold)))
    while size / 2.0 ** k > threshold:
        k += 1
    return k


def sum_series(x: Multivector, cfg: SeriesConfig) -> tuple[Multivector, int, float]:
    """Sum ``exp(x)`` term by term; returns (sum, terms used, last change)."""
    total = Multivector.scalar(x.sig, 1.0)
    term = total
    small_run = 0
    correction = math.inf
    for n in range(1, cfg.max_terms + 1):
        term = term * (x / n)
        total = total + term
        correction = term.max_abs()
        small_run = small_run + 1 if correction < cfg.target_tol else 0
        if small_run >= 2:
            return total, n, correction
    raise SeriesConvergenceError(
        f"series did not converge in {cfg.max_terms} terms (last correction {correction:.3g})",
        correction)


def exp_series_detail(a: Multivector, cfg: Optional[SeriesConfig] = None) -> SeriesResult:
    cfg = cfg or DEFAULT_CONFIG
    k = scaling_exponent(a, cfg.scale_threshold)
    value, terms, corr = sum_series(a / 2.0 ** k, cfg)
    for _ in range(k):
        value = value * value
    return SeriesResult(value, terms, k, corr)


def exp_series_scaled(a: Multivector, cfg: Optional[SeriesConfig] = None) -> Multivector:
    return exp_series_detail(a, cfg).value
