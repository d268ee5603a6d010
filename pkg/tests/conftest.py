from fractions import Fraction

import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from invkit.poly import Poly
from invkit.scalar import ExactComplex

settings.register_profile(
    "invkit", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("invkit")

SOLVABLE_CUBIC = "(x^3+2x) D3 + x D2 + 1"
DEGENERATE_CUBIC = "(x+1) D3 + x^4 D2 + 2x"
NEGATIVE_INDEX_OP = "x^2 D3 + 4 D2"
JULIA = "(x^2-x+1i) D1 + 1"
LEVY = "(x^2+x) D2 + 1i D1 + 2"
COCHLEOID = "x^2 D1 + (x-1)"
LAME = "x(x-1) D2 + (2x-1) D1"
FIVE_TERM_BIPOLY = "u^8+u^7 v^2+u^5 v^4+(5+7i)u^3 v^6-23 u v^7"

fractions = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 6))
scalars = st.builds(ExactComplex, fractions, fractions)
small_ints = st.integers(-5, 5)


def polys(max_degree=6, elements=scalars):
    return st.lists(elements, min_size=0, max_size=max_degree + 1).map(Poly)


def nonzero_polys(max_degree=6, elements=scalars):
    return polys(max_degree, elements).filter(lambda p: not p.is_zero())


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_disk_points(rng, n, radius=1.0):
    r = radius * np.sqrt(rng.random(n))
    return r * np.exp(2j * np.pi * rng.random(n))


# acceptance criteria record one line each; printed after the run
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[num])
