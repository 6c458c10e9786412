"""Worked examples with frozen reference values, used by ``mvexp selftest``.

Reference coefficients were obtained by evaluating each example's printed
closed-form answer at 40 significant digits (see ``tests/golden.py``, which
re-derives them and checks this table).
"""
from __future__ import annotations

import time
from typing import NamedTuple

import numpy as np

from .algebra import Multivector, Signature, wedge_mix_scalar
from .closed import exp_closed_detail, inner_sum

QUANTITIES = {
    "a_plus_sq": lambda mv, res: res.mixing.a_plus_sq,
    "a_minus_sq": lambda mv, res: res.mixing.a_minus_sq,
    "inner": lambda mv, res: inner_sum(mv),
    "minus_two_i_wedge": lambda mv, res: -2.0 * wedge_mix_scalar(mv),
}

EX1 = (-8, 0, -6, -9, 5, -5, 6, -4)


class GoldenCase(NamedTuple):
    label: str
    algebra: tuple[int, int]
    mv: tuple[float, ...]
    expected: tuple[str, ...]
    # printed scalar quantities: name -> value (names in ``QUANTITIES``)
    quantities: dict


CASES = (
    GoldenCase("Example 1", (0, 3), EX1, (
        "0.0049747331601599805269", "0.0063385241027113559455",
        "-0.001056300554905222689", "-0.0042255025418208990108",
        "-0.0042257828425409067153", "0.0010565207911852287425",
        "0.0063384039738313526436", "-0.0049686004738006179036"), {"a_plus_sq": 353, "a_minus_sq": 53}),
    GoldenCase("Example 2", (3, 0), EX1, (
        "1.8038113655771691562", "-1.1847917397272481093",
        "-1.1501959481805968234", "-1.2316306973845418562",
        "-1.6414630275842971092", "1.0490671577206730545",
        "0.16286949840789006568", "1.6827383469595935233"),
        {"inner": 31, "minus_two_i_wedge": -150}),
    GoldenCase("Example 3", (1, 2), (3, -1, 0, 0, 2, 0, 0, 0), (
        "95.038202212864568625", "-41.542342462505892413", "0", "0",
        "83.084684925011784826", "0", "0", "0"), {"a_plus_sq": 5, "a_minus_sq": 0}),
    GoldenCase("Example 4", (2, 1), EX1, (
        "657.23900234516797343", "-332.09705140873717593",
        "-608.84459437546478883", "-221.39803446166140006",
        "-221.39803416739703427", "-608.84459435444590556",
        "332.09705153485047556", "-657.23899620667464985"), {"a_plus_sq": 159, "a_minus_sq": -141}),
    GoldenCase("Example 5", (2, 1), (0, 0, -6, 0, 5, 0, 0, 1), (
        "21.297154140022763189", "0", "-38.426738274114772276",
        "-24.387982751672937976", "32.022281895095643563",
        "29.265579302007525572", "0", "16.219788131530460156"), {"a_plus_sq": -11, "a_minus_sq": -11}),
    GoldenCase("Example 6", (2, 1), (2, 0, 0, 1, 6, 0, 0, 3), (
        "21.188273101282048615", "0", "0", "71.279336402848515405",
        "-71.037644540054720651", "0", "0", "20.91092796125634313"), {"a_plus_sq": 25, "a_minus_sq": 49}),
    GoldenCase("Example 7", (2, 1), (2, 0, -10, -10, 0, 2, 1, 1), (
        "4114.2813056649450393", "613.21236454431468985",
        "-7356.8992537741392014", "-6130.4745246855098217",
        "6132.1236454431468985", "7358.2185503802488629",
        "613.04745246855098217", "4111.7441426127770612"), {"a_plus_sq": -45, "a_minus_sq": 35}),
)


def coefficient_rel_error(got: np.ndarray, ref: np.ndarray) -> float:
    """Largest coefficientwise relative error.

    Coefficients that are exactly zero in the reference are measured
    against the largest reference coefficient instead.
    """
    scale = float(np.max(np.abs(ref)))
    worst = 0.0
    for g, r in zip(got, ref):
        denom = abs(r) if r != 0 else scale
        worst = max(worst, abs(g - r) / denom)
    return worst


class GoldenOutcome(NamedTuple):
    label: str
    ok: bool
    rel_error: float
    mixing_ok: bool
    branch: str


def run_golden(rtol: float = 1e-12) -> list[GoldenOutcome]:
    out = []
    for case in CASES:
        mv = Multivector(Signature(*case.algebra), case.mv)
        res = exp_closed_detail(mv)
        ref = np.array([float(x) for x in case.expected])
        err = coefficient_rel_error(res.value.coeffs, ref)
        mixing_ok = all(abs(QUANTITIES[name](mv, res) - value) <= 1e-12 * max(1.0, abs(value))
                        for name, value in case.quantities.items())
        out.append(GoldenOutcome(case.label, err <= rtol and mixing_ok, err, mixing_ok, res.branch))
    return out


def timed_golden(rtol: float = 1e-12) -> tuple[list[GoldenOutcome], float]:
    t0 = time.perf_counter()
    res = run_golden(rtol)
    return res, time.perf_counter() - t0
