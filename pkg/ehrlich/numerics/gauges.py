"""
Scalar control functions for the convergence theorems.

All functions take the GaugeParams (a, b) of the problem and a PrecisionContext
and return mpmath reals of that context. Arguments outside the interval a
function is defined on raise DomainError; nothing is clamped.
"""
from __future__ import annotations

from fractions import Fraction

from .apcx import PrecisionContext
from .metrics import GaugeParams
from ..errors import DomainError


def _nonnegative(t, ctx: PrecisionContext):
    t = ctx.real(t)
    if t < 0:
        raise DomainError(f"gauge argument must be >= 0, got {t}")
    return t


def phi(t, params: GaugeParams, ctx: PrecisionContext):
    """phi(t) = a t^2 / ((1 - t)(1 - b t) - a t^2)."""
    t = ctx.real(t)
    a, b = params.a, params.b
    at2 = a * t * t
    den = (1 - t) * (1 - b * t) - at2
    if den <= 0:
        raise DomainError(f"phi undefined at t={t}: denominator {den} <= 0")
    return at2 / den


def radius_R(params: GaugeParams, ctx: PrecisionContext):
    """Local convergence radius; the root of phi(t) = 1."""
    a, b = params.a, params.b
    return 2 / (b + 1 + ctx.sqrt((b - 1) ** 2 + 8 * a))


def radius_second(params: GaugeParams, ctx: PrecisionContext):
    """R = 2 / (3 + sqrt(1 + 8a)), the radius for E measured against d(x)."""
    return 2 / (3 + ctx.sqrt(1 + 8 * params.a))


def psi1(t, params: GaugeParams, ctx: PrecisionContext):
    t = ctx.real(t)
    a, b = params.a, params.b
    at2 = a * t * t
    den = 1 - t - at2
    if den <= 0:
        raise DomainError(f"psi undefined at t={t}: denominator {den} <= 0")
    return ((1 - t) * (1 - b * t) - at2) / den


def _check_radius(t, limit, name: str):
    if t > limit:
        raise DomainError(f"{name} requires t <= R = {limit}, got t = {t}")


def _phi_chain(t, N: int, params: GaugeParams):
    # phi_0 = 1, phi_{k+1} = a t^2 phi_k / ((1 - t)(1 - b t) - a t^2 phi_k)
    a, b = params.a, params.b
    at2 = a * t * t
    base = (1 - t) * (1 - b * t)
    value = t.context.mpf(1)
    for _ in range(N):
        value = at2 * value / (base - at2 * value)
    return value


def phi_N(t, N: int, params: GaugeParams, ctx: PrecisionContext):
    """phi_N on [0, R]; phi_0 = 1 and phi_N(R) = 1 for every N."""
    if N < 0:
        raise DomainError(f"N must be >= 0, got {N}")
    t = _nonnegative(t, ctx)
    _check_radius(t, radius_R(params, ctx), 'phi_N')
    return _phi_chain(t, N, params)


def varphi_N(t, N: int, params: GaugeParams, ctx: PrecisionContext):
    """t * phi_N(t), a gauge function of order 2N + 1."""
    t = ctx.real(t)
    return t * phi_N(t, N, params, ctx)


def beta_psi_N(t, N: int, params: GaugeParams, ctx: PrecisionContext):
    """(beta_N(t), psi_N(t)) for N >= 1, using b = 2 and 0 <= t <= radius_second."""
    if N < 1:
        raise DomainError(f"beta_N/psi_N need N >= 1, got {N}")
    params = params.second_kind()
    t = _nonnegative(t, ctx)
    _check_radius(t, radius_second(params, ctx), 'beta_N')
    x = params.a * t * t * _phi_chain(t, N - 1, params)
    beta = x / (1 - t - x)
    psi = 1 - 2 * t * (1 + beta)
    return beta, psi


def beta_N(t, N: int, params: GaugeParams, ctx: PrecisionContext):
    return beta_psi_N(t, N, params, ctx)[0]


def psi_N(t, N: int, params: GaugeParams, ctx: PrecisionContext):
    return beta_psi_N(t, N, params, ctx)[1]


def psi_N_quotient(t, N: int, params: GaugeParams, ctx: PrecisionContext):
    """psi_N in quotient form ((1-t)(1-2t) - a t^2 phi_{N-1}) / (1 - t - a t^2 phi_{N-1})."""
    if N < 1:
        raise DomainError(f"psi_N needs N >= 1, got {N}")
    params = params.second_kind()
    t = _nonnegative(t, ctx)
    _check_radius(t, radius_second(params, ctx), 'psi_N')
    x = params.a * t * t * _phi_chain(t, N - 1, params)
    return ((1 - t) * (1 - 2 * t) - x) / (1 - t - x)


def alpha_fn(t, params: GaugeParams, ctx: PrecisionContext):
    """alpha(t) = 2 / (1 - (a-1)t + sqrt((1 - (a-1)t)^2 - 4t))."""
    t = _nonnegative(t, ctx)
    s = 1 - (params.a - 1) * t
    if s <= 0:
        raise DomainError(f"alpha undefined at t={t}: 1 - (a-1)t <= 0")
    radicand = s * s - 4 * t
    if radicand < 0:
        raise DomainError(f"alpha undefined at t={t}: negative radicand")
    return 2 / (s + ctx.sqrt(radicand))


def semilocal_threshold(params: GaugeParams, ctx: PrecisionContext):
    """8 / (3 + sqrt(1 + 8a))^2; E_f(x) below it certifies convergence."""
    s = 3 + ctx.sqrt(1 + 8 * params.a)
    return 8 / (s * s)


def threshold_for_radius(R, params: GaugeParams, ctx: PrecisionContext):
    """R(1 - R) / (1 + (a - 1)R) for any 0 < R <= 1 / (1 + sqrt(a))."""
    R = ctx.real(R)
    a = params.a
    limit = 1 / (1 + ctx.sqrt(a))
    if R <= 0 or R > limit:
        raise DomainError(f"R must lie in (0, {limit}], got {R}")
    return R * (1 - R) / (1 + (a - 1) * R)


def radius_Rh(h, params: GaugeParams, ctx: PrecisionContext):
    """Radius on which each step contracts E by at least h^2 (phi(R_h) = h^2)."""
    h = ctx.real(h)
    if not 0 < h < 1:
        raise DomainError(f"h must lie in (0, 1), got {h}")
    a, b = params.a, params.b
    return 2 / (b + 1 + ctx.sqrt((b - 1) ** 2 + 4 * a * (1 + 1 / (h * h))))


def contraction_exponent(N: int, k: int) -> Fraction:
    """((2N+1)^k - 1) / (2N), the exponent of lambda after k steps."""
    order = 2 * N + 1
    return Fraction(order ** k - 1, 2 * N)
