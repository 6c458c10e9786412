import math

import numpy as np
import pytest

from conftest import random_mv
from forms import max_diff
from mvexp.algebra import CL03, CL21, CL30, Multivector, commutator
from mvexp.closed import exp_closed
from mvexp.series import SeriesConfig, SeriesConvergenceError
from mvexp.trig import (
    FUNCTIONS, cos_mv, cos_sin_mv, cos_sin_series, cosh_mv, cosh_sinh_mv, sin_mv, sinh_mv,
    uses_series,
)

ONE_TOL = 1e-9


def test_scalar_arguments(sig):
    s = Multivector.scalar(sig, 0.8)
    assert cosh_mv(s)[0] == pytest.approx(math.cosh(0.8), rel=1e-15)
    assert sinh_mv(s)[0] == pytest.approx(math.sinh(0.8), rel=1e-15)
    assert cos_mv(s)[0] == pytest.approx(math.cos(0.8), rel=1e-14)
    assert sin_mv(s)[0] == pytest.approx(math.sin(0.8), rel=1e-14)
    for f in (cosh_mv, sinh_mv, cos_mv, sin_mv):
        assert np.max(np.abs(f(s).coeffs[1:])) < 1e-15


def test_exp_is_cosh_plus_sinh(sig, rng):
    for _ in range(200):
        x = random_mv(rng, sig)
        ep, em = exp_closed(x), exp_closed(-x)
        ch, sh = cosh_sinh_mv(x)
        # cosh and sinh both carry the rounding of the larger of exp(x), exp(-x)
        scale = max(1.0, ep.max_abs(), em.max_abs())
        assert max_diff(ch + sh, ep) < 1e-14 * scale


def test_hyperbolic_identity(sig, rng):
    one = Multivector.scalar(sig, 1)
    for _ in range(100):
        x = random_mv(rng, sig)
        ch, sh = cosh_mv(x), sinh_mv(x)
        assert max_diff(ch * ch - sh * sh, one) < ONE_TOL


def test_trig_identity(sig, rng):
    one = Multivector.scalar(sig, 1)
    for _ in range(100):
        x = random_mv(rng, sig)
        c, s = cos_sin_mv(x)
        assert max_diff(c * c + s * s, one) < ONE_TOL


def test_double_angle(sig, rng):
    for _ in range(100):
        x = random_mv(rng, sig)
        c, s = cos_sin_mv(x)
        c2, s2 = cos_sin_mv(2 * x)
        assert max_diff(s2, 2 * s * c) < ONE_TOL
        assert max_diff(c2, c * c - s * s) < ONE_TOL


def test_same_argument_commutes(sig, rng):
    for _ in range(50):
        x = random_mv(rng, sig)
        vals = [cosh_mv(x), sinh_mv(x), cos_mv(x), sin_mv(x)]
        for f in vals:
            for g in vals:
                assert commutator(f, g).max_abs() < 1e-10


@pytest.mark.parametrize("sig", [CL03, CL21], ids=str)
def test_series_split_is_exp_of_i_times_a_analogue(sig, rng):
    # with no imaginary pseudoscalar, check against the plain power series
    for _ in range(20):
        x = random_mv(rng, sig, -0.5, 0.5)
        c, s = cos_sin_series(x)
        cos_ref = Multivector.scalar(sig, 0)
        sin_ref = Multivector.scalar(sig, 0)
        p = Multivector.scalar(sig, 1)
        for k in range(40):
            if k % 2 == 0:
                cos_ref = cos_ref + ((-1) ** (k // 2) / math.factorial(k)) * p
            else:
                sin_ref = sin_ref + ((-1) ** (k // 2) / math.factorial(k)) * p
            p = p * x
        assert max_diff(c, cos_ref) < 1e-14
        assert max_diff(s, sin_ref) < 1e-14


def test_i_trick_matches_series(rng):
    # in Cl(3,0) both routes must agree
    for _ in range(50):
        x = random_mv(rng, CL30)
        c1, s1 = cos_sin_mv(x)
        c2, s2 = cos_sin_series(x)
        assert max_diff(c1, c2) < 1e-10
        assert max_diff(s1, s2) < 1e-10


def test_pure_bivector_cl30_cos_is_cosh_of_norm(rng):
    # a bivector B in Cl(3,0) squares to -|B|^2, so cos B = cosh |B|
    b = Multivector(CL30, [0, 0, 0, 0, 0.3, -0.4, 1.2, 0])
    n = math.sqrt(0.09 + 0.16 + 1.44)
    assert max_diff(cos_mv(b), Multivector.scalar(CL30, math.cosh(n))) < 1e-14


def test_series_convergence_error():
    x = Multivector(CL03, [0.9, 0.1, 0, 0, 0, 0, 0, 0])
    with pytest.raises(SeriesConvergenceError):
        cos_sin_series(x, SeriesConfig(max_terms=2))


def test_function_table():
    x = Multivector(CL30, [0.1] * 8)
    assert set(FUNCTIONS) == {"cos", "sin", "cosh", "sinh"}
    assert FUNCTIONS["sinh"](x) == sinh_mv(x)
    assert uses_series("cos", Multivector(CL21)) and not uses_series("cos", x)
    assert not uses_series("cosh", Multivector(CL21))
