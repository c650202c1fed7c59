import random
from fractions import Fraction

import pytest

from ehrlich.errors import PolynomialError
from ehrlich.numerics.apcx import PrecisionContext
from ehrlich.numerics.polynomial import (Polynomial, derivative, evaluate, evaluate_with_derivative,
                                         from_roots, is_root_vector, sep, wilkinson)


def test_degree_and_leading_invariants():
    with pytest.raises(PolynomialError):
        Polynomial.from_coefficients([1, 2])
    with pytest.raises(PolynomialError):
        Polynomial.from_coefficients([0, 1, 2])
    f = Polynomial.from_coefficients([2, 0, -1])
    assert f.degree == 2
    assert f.leading == (Fraction(2), Fraction(0))


@pytest.mark.parametrize('coeffs, z, expected', [
    ([1, 0, 0, 0, -1], 1, 0),
    ([1, 0, 0, 0, -1], 2, 15),
    ([1, 0, -1], 2, 3),
])
def test_evaluate(ctx, coeffs, z, expected):
    assert evaluate(Polynomial.from_coefficients(coeffs), z, ctx) == expected


def test_evaluate_with_derivative_matches_evaluate(ctx, quartic):
    z = ctx.complex('0.3', '-1.7')
    fz, dfz = evaluate_with_derivative(quartic, z, ctx)
    assert fz == evaluate(quartic, z, ctx)
    assert abs(dfz - 4 * z ** 3) < ctx.real('1e-45')


def test_derivative():
    assert derivative(Polynomial.from_coefficients([1, 0, 0, 0, -1])).coeffs == \
        tuple((Fraction(c), Fraction(0)) for c in (4, 0, 0, 0))
    assert derivative(Polynomial.from_coefficients([1, 0, -1])).degree == 1
    f = Polynomial.from_coefficients([1, 1] + [0] * 13 + [1])
    df = derivative(f)
    assert df.coeffs[:2] == ((Fraction(15), Fraction(0)), (Fraction(14), Fraction(0)))
    assert all(c == (0, 0) for c in df.coeffs[2:])


def test_from_roots():
    assert from_roots([1, -1]) == Polynomial.from_coefficients([1, 0, -1])
    assert from_roots([1, -1, (0, 1), (0, -1)]) == Polynomial.from_coefficients([1, 0, 0, 0, -1])
    w = wilkinson(20)
    assert w.degree == 20
    assert w.coeffs[-1] == (Fraction(2432902008176640000), Fraction(0))
    assert w.coeffs[1] == (Fraction(-210), Fraction(0))
    assert w.monic_coefficient(1) == (Fraction(-210), Fraction(0))


def test_monic_coefficient_divides_by_leading():
    f = Polynomial.from_coefficients([(0, 2), 4, 1])
    # 4 / 2i = -2i
    assert f.monic_coefficient(1) == (Fraction(0), Fraction(-2))


def test_from_roots_vanishes_at_roots(ctx):
    rng = random.Random(7)
    roots = [(Fraction(rng.randint(-90, 90), 37), Fraction(rng.randint(-90, 90), 41)) for _ in range(7)]
    f = from_roots(roots, leading=(3, -1))
    scale = max(abs(c) for c in f.at(ctx))
    for r in roots:
        assert abs(evaluate(f, r, ctx)) <= ctx.mp.ldexp(scale, -(ctx.precision_bits // 2))
    assert is_root_vector(f, roots, ctx)
    assert not is_root_vector(f, roots[:-1] + [(0, 0)], ctx)


def test_derivative_matches_difference_quotient(ctx):
    f = from_roots([1, 2, (0, 3), (-1, -1), '0.5'])
    df = derivative(f)
    h = ctx.real('1e-20')
    for z in (ctx.complex('0.7', '0.1'), ctx.complex(-2, 1)):
        quotient = (evaluate(f, z + h, ctx) - evaluate(f, z - h, ctx)) / (2 * h)
        exact = evaluate(df, z, ctx)
        assert abs(quotient - exact) <= abs(exact) * ctx.real('1e-30')


def test_sep(ctx):
    assert abs(sep([1, -1, (0, 1), (0, -1)], ctx) - ctx.sqrt(2)) < ctx.real('1e-45')
    assert sep(range(1, 21), ctx) == 1
    assert sep([1, -1], ctx) == 2


def test_materialisation_is_per_precision():
    f = Polynomial.from_coefficients(['0.1', 0, -1])
    low, high = PrecisionContext(64), PrecisionContext(256)
    # 0.1 has no finite binary expansion, so the two roundings differ
    assert f.at(low)[0].real != f.at(high)[0].real
    assert f.at(low) is f.at(low)
    assert f.at(low)[0].context is low.mp
    assert f.at(high)[0].context is high.mp


def test_json_round_trip():
    f = Polynomial.from_coefficients([1, ('-1.36', '0.42'), '0.5'])
    data = f.to_json()
    assert data == {"degree": 2, "coeffs": ["1", "0", "-1.36", "0.42", "0.5", "0"]}
    assert Polynomial.from_json(data) == f
    with pytest.raises(PolynomialError):
        Polynomial.from_json({"degree": 2, "coeffs": ["1", "0"]})
