"""Propagators for linear first-order multivector ODEs.

    dX/dt = A X                 X(t) = exp(tA) X0
    dX/dt = A X + f(t)          X(t) = exp(tA) X0 + int_0^t exp((t-s)A) f(s) ds
    dX/dt = A X + X B           X(t) = exp(tA) X0 exp(tB)

The propagators are exact in ``t``; only the forcing integral is
discretised (composite Simpson on a uniform grid).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

from .algebra import Multivector, SignatureMismatchError
from .closed import exp_closed

Forcing = Callable[[float], Multivector]


@dataclass(frozen=True)
class OdeProblem:
    A: Multivector
    X0: Multivector
    t_end: float
    forcing: Optional[Forcing] = None
    B: Optional[Multivector] = None
    steps: int = 400

    def __post_init__(self):
        for m in (self.X0, self.B):
            if m is not None and m.sig != self.A.sig:
                raise SignatureMismatchError(f"{m.sig} vs {self.A.sig}")
        if self.steps < 1:
            raise ValueError("steps must be >= 1")
        if not math.isfinite(self.t_end):
            raise ValueError("t_end must be finite")

    @property
    def sig(self):
        return self.A.sig


def _same_sig(*mvs: Multivector) -> None:
    sig = mvs[0].sig
    for m in mvs[1:]:
        if m.sig != sig:
            raise SignatureMismatchError(f"{m.sig} vs {sig}")


def propagate_homogeneous(a: Multivector, x0: Multivector, t: float) -> Multivector:
    _same_sig(a, x0)
    return exp_closed(t * a) * x0


def propagate_two_sided(a: Multivector, b: Multivector, x0: Multivector, t: float) -> Multivector:
    _same_sig(a, b, x0)
    return exp_closed(t * a) * x0 * exp_closed(t * b)


def simpson(values: list[Multivector], h: float) -> Multivector:
    n = len(values) - 1
    if n < 2 or n % 2:
        raise ValueError("Simpson's rule needs an even number of intervals")
    odd = values[1]
    for v in values[3:n:2]:
        odd = odd + v
    even = values[2] if n > 2 else 0.0 * values[0]
    for v in values[4:n - 1:2]:
        even = even + v
    return (values[0] + values[n] + 4.0 * odd + 2.0 * even) * (h / 3.0)


def forcing_integral(a: Multivector, forcing: Forcing, t: float, steps: int) -> Multivector:
    """``int_0^t exp((t-s)A) f(s) ds`` by composite Simpson with ``steps`` rounded up to even."""
    n = max(2, steps + steps % 2)
    h = t / n
    samples = [exp_closed((t - j * h) * a) * forcing(j * h) for j in range(n + 1)]
    return simpson(samples, h)


def propagate_forced(problem: OdeProblem) -> Multivector:
    a, x0, t = problem.A, problem.X0, problem.t_end
    x = propagate_homogeneous(a, x0, t)
    if problem.forcing is None:
        return x
    if problem.B is not None:
        raise ValueError("forcing is only supported for the one-sided system dX/dt = A X + f")
    return x + forcing_integral(a, problem.forcing, t, problem.steps)


def solve(problem: OdeProblem, t: Optional[float] = None) -> Multivector:
    """Evaluate the solution of ``problem`` at ``t`` (default ``problem.t_end``)."""
    if t is not None:
        problem = OdeProblem(problem.A, problem.X0, t, problem.forcing, problem.B, problem.steps)
    if problem.B is not None:
        if problem.forcing is not None:
            raise ValueError("forcing is only supported for the one-sided system dX/dt = A X + f")
        return propagate_two_sided(problem.A, problem.B, problem.X0, problem.t_end)
    return propagate_forced(problem)


def constant_forcing(f: Multivector) -> Forcing:
    return lambda _t: f
