import sys, os
from fractions import Fraction

import pytest

# Ensure project root on path so the ehrlich package imports without installation
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from ehrlich.numerics.apcx import PrecisionContext, exact_real  # noqa: E402
from ehrlich.numerics.metrics import GaugeParams, PNorm  # noqa: E402
from ehrlich.numerics.polynomial import Polynomial  # noqa: E402


@pytest.fixture
def ctx():
    return PrecisionContext.from_digits(50)


@pytest.fixture
def quadratic():
    """z^2 - 1."""
    return Polynomial.from_coefficients([1, 0, -1])


@pytest.fixture
def quartic():
    """z^4 - 1."""
    return Polynomial.from_coefficients([1, 0, 0, 0, -1])


@pytest.fixture
def quartic_roots(ctx):
    return ctx.vector([1, -1, (0, 1), (0, -1)])


@pytest.fixture
def quartic_start(ctx):
    return ctx.vector([('0.5', '0.5'), ('-1.36', '0.42'), ('-0.25', '1.28'), ('0.46', '-1.37')])


def params_for(n, p, ctx):
    return GaugeParams.build(n, PNorm.parse(p), ctx)


def close(a, b, tol='1e-30'):
    return abs(a - b) <= as_mp(tol, a)


def as_mp(tol, like):
    # tolerance as a value of the same mpmath context as `like`
    q = exact_real(tol)
    return like.context.mpf(q.numerator) / q.denominator


def sci_parts(value):
    """(mantissa, exponent) with 1 <= |mantissa| < 10, exponent an int."""
    mp = value.context
    if value == 0:
        return mp.mpf(0), 0
    exponent = int(mp.floor(mp.log10(abs(value))))
    return value / mp.mpf(10) ** exponent, exponent


def assert_sci_matches(value, published: str, mantissa_tol=Fraction(1, 1000)):
    """Same decimal exponent and mantissa within 1e-3 of the printed one."""
    m_pub, e_pub = published.lower().split('e')
    mantissa, exponent = sci_parts(value)
    assert exponent == int(e_pub), f"exponent {exponent} != {e_pub} for {published}"
    assert abs(mantissa - as_mp(m_pub, mantissa)) <= as_mp(mantissa_tol, mantissa), \
        f"mantissa {mantissa} vs {published}"
