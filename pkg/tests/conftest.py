import os
import sys

import numpy as np
import pytest
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from mvexp.algebra import SIGNATURES, Multivector  # noqa: E402


def random_mv(rng, sig, lo=-2.0, hi=2.0):
    return Multivector(sig, rng.uniform(lo, hi, 8))


@pytest.fixture
def rng():
    return np.random.default_rng(20211)


@pytest.fixture(params=SIGNATURES, ids=str)
def sig(request):
    return request.param


coeff = st.floats(min_value=-2.0, max_value=2.0, allow_nan=False, allow_infinity=False)
coeffs8 = st.lists(coeff, min_size=8, max_size=8)


def mv_strategy(sig):
    return coeffs8.map(lambda c: Multivector(sig, c))


_ACCEPTANCE = pytest.StashKey[dict]()


@pytest.fixture
def acceptance(request):
    """Record one summary line per acceptance criterion."""
    log = request.config.stash.setdefault(_ACCEPTANCE, {})

    def record(criterion: str, ok: bool, detail: str) -> bool:
        log[criterion] = (ok, detail)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    log = config.stash.get(_ACCEPTANCE, {})
    if not log:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(log, key=lambda k: (int(k.split()[0].rstrip("ab")), k)):
        ok, detail = log[key]
        terminalreporter.write_line(f"criterion {key:<4} {'PASS' if ok else 'FAIL'}  {detail}")
