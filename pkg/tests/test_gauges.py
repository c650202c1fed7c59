from fractions import Fraction

import pytest

from ehrlich.errors import DomainError
from ehrlich.numerics import gauges as g
from ehrlich.numerics.apcx import PrecisionContext

from .conftest import close, params_for

CTX = PrecisionContext.from_digits(40)
SLACK = CTX.real('1e-30')


def _grid(R, steps=100):
    return [R * CTX.real(Fraction(k, steps)) for k in range(steps + 1)]


@pytest.fixture
def p43():
    """n = 4 under the max norm: a = 3, b = 2."""
    return params_for(4, 'inf', CTX)


@pytest.fixture(params=[(4, 'inf'), (15, 'inf'), (7, '2'), (5, '1')])
def params(request):
    return params_for(*request.param, CTX)


# -- phi, R, psi -------------------------------------------------------------

def test_phi_examples(p43):
    assert g.phi(0, p43, CTX) == 0
    assert close(g.phi('0.25', p43, CTX), 1)
    assert close(g.phi('0.1', p43, CTX), CTX.real('0.03') / CTX.real('0.69'))
    with pytest.raises(DomainError):
        g.phi('0.6', p43, CTX)


def test_radius_R(p43, params):
    assert close(g.radius_R(p43, CTX), CTX.real('0.25'))
    assert close(g.radius_R(params_for(2, '1', CTX), CTX), 2 / (2 + CTX.sqrt(8)))
    assert close(g.radius_R(params_for(15, 'inf', CTX), CTX), 2 / (3 + CTX.sqrt(113)))
    assert close(g.phi(g.radius_R(params, CTX), params, CTX), 1)


def test_psi1(p43):
    assert g.psi1(0, p43, CTX) == 1
    assert close(g.psi1('0.1', p43, CTX), CTX.real('0.69') / CTX.real('0.87'))
    assert g.psi1(g.radius_second(p43, CTX), p43, CTX) > 0


# -- phi_N and varphi_N ------------------------------------------------------

def test_phi_N_boundary_values(params):
    R = g.radius_R(params, CTX)
    for N in range(0, 8):
        assert g.phi_N('0.01', 0, params, CTX) == 1
        assert close(g.phi_N(R, N, params, CTX), 1)
        assert close(g.varphi_N(R, N, params, CTX), R)
    assert g.varphi_N(0, 3, params, CTX) == 0
    assert g.varphi_N('0.05', 0, params, CTX) == CTX.real('0.05')


def test_phi_N_recursion(p43):
    phi = CTX.real('0.03') / CTX.real('0.69')
    at2 = CTX.real('0.03')
    expected = at2 * phi / (CTX.real('0.72') - at2 * phi)
    assert close(g.phi_N('0.1', 1, p43, CTX), phi)
    assert close(g.phi_N('0.1', 2, p43, CTX), expected)


def test_phi_N_rejects_outside_radius(p43):
    with pytest.raises(DomainError):
        g.phi_N('0.26', 2, p43, CTX)
    with pytest.raises(DomainError):
        g.phi_N('-0.01', 2, p43, CTX)
    with pytest.raises(DomainError):
        g.phi_N('0.1', -1, p43, CTX)


def test_phi_N_properties_on_grid(params):
    R = g.radius_R(params, CTX)
    grid = _grid(R)
    for N in range(0, 7):
        previous = None
        for t in grid:
            phiN = g.phi_N(t, N, params, CTX)
            phi = g.phi(t, params, CTX)
            nxt = g.phi_N(t, N + 1, params, CTX)
            assert 0 <= phiN <= 1 + SLACK
            assert nxt <= phi * phiN + SLACK
            assert phi * phiN <= phiN + SLACK
            assert phiN <= phi ** N + SLACK
            if previous is not None:
                assert phiN + SLACK >= previous
            previous = phiN


@pytest.mark.parametrize('lam', ['0', '0.1', '0.5', '0.9', '1'])
def test_phi_N_quasi_homogeneous(params, lam):
    lam = CTX.real(lam)
    for t in _grid(g.radius_R(params, CTX), 8):
        for N in range(0, 5):
            assert g.phi_N(lam * t, N, params, CTX) <= lam ** (2 * N) * g.phi_N(t, N, params, CTX) + SLACK


# -- beta_N / psi_N ----------------------------------------------------------

def test_beta_psi_examples(p43):
    assert g.beta_psi_N(0, 1, p43, CTX) == (0, 1)
    beta, psi = g.beta_psi_N('0.1', 1, p43, CTX)
    assert close(beta, CTX.real('0.03') / CTX.real('0.87'))
    assert close(psi, CTX.real('0.69') / CTX.real('0.87'))
    assert close(psi, g.psi1('0.1', p43.second_kind(), CTX))


def test_beta_psi_boundary(params):
    R = g.radius_second(params, CTX)
    a = params.a
    for N in range(1, 7):
        beta, psi = g.beta_psi_N(R, N, params, CTX)
        assert beta < 1
        assert psi > 0
    assert close(g.beta_N(R, 1, params, CTX), a * R * R / (1 - R - a * R * R))


def test_beta_psi_domain(p43):
    R = g.radius_second(p43, CTX)
    with pytest.raises(DomainError):
        g.beta_N(R * CTX.real('1.01'), 2, p43, CTX)
    with pytest.raises(DomainError):
        g.psi_N('0.1', 0, p43, CTX)


def test_beta_psi_properties_on_grid(params):
    second = params.second_kind()
    grid = _grid(g.radius_second(params, CTX))
    for N in range(1, 7):
        prev_beta = prev_psi = None
        for t in grid:
            beta, psi = g.beta_psi_N(t, N, params, CTX)
            assert close(beta, g.phi_N(t, N, second, CTX) * psi)
            assert close(psi, g.psi_N_quotient(t, N, params, CTX))
            nbeta, npsi = g.beta_psi_N(t, N + 1, params, CTX)
            assert nbeta <= beta + SLACK
            assert npsi + SLACK >= psi
            assert 0 <= beta < 1 and 0 < psi <= 1
            if prev_beta is not None:
                assert beta + SLACK >= prev_beta
                assert psi <= prev_psi + SLACK
            prev_beta, prev_psi = beta, psi


# -- alpha, thresholds, R_h --------------------------------------------------

def test_alpha(p43):
    one = params_for(2, 'inf', CTX)
    assert g.alpha_fn(0, one, CTX) == 1
    assert close(g.alpha_fn('0.1875', one, CTX), CTX.real(4) / 3)
    assert g.alpha_fn('0.010032', p43, CTX) >= 1
    with pytest.raises(DomainError):
        g.alpha_fn('0.3', p43, CTX)


@pytest.mark.parametrize('n, expected', [(4, '0.125000'), (15, '0.043061'),
                                         (20, '0.033867'), (40, '0.018685')])
def test_semilocal_threshold(n, expected):
    value = g.semilocal_threshold(params_for(n, 'inf', CTX), CTX)
    assert abs(value - CTX.real(expected)) < CTX.real('5e-7')


def test_threshold_matches_radius_identity(params):
    R = g.radius_second(params, CTX)
    assert close(g.threshold_for_radius(R, params, CTX), g.semilocal_threshold(params, CTX))
    assert R < 1 / (1 + CTX.sqrt(params.a))
    with pytest.raises(DomainError):
        g.threshold_for_radius(0, params, CTX)
    with pytest.raises(DomainError):
        g.threshold_for_radius('0.9', params, CTX)


def test_radius_Rh(p43, params):
    assert close(g.radius_Rh('0.5', p43, CTX), 2 / (3 + CTX.sqrt(61)))
    for h in ('0.1', '0.5', '0.9'):
        h = CTX.real(h)
        assert close(g.phi(g.radius_Rh(h, params, CTX), params, CTX), h * h)
    near_one = g.radius_Rh(1 - CTX.real('1e-8'), params, CTX)
    assert abs(near_one - g.radius_R(params, CTX)) < CTX.real('1e-6')
    for h in ('0', '1', '1.5'):
        with pytest.raises(DomainError):
            g.radius_Rh(h, params, CTX)


def test_contraction_exponent():
    assert g.contraction_exponent(1, 0) == 0
    assert g.contraction_exponent(1, 1) == 1
    assert g.contraction_exponent(1, 2) == 4
    assert g.contraction_exponent(2, 2) == Fraction(24, 4)
