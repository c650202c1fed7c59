"""
Certified iteration driver.

``solve`` runs x^(k+1) = T^(N)(x^(k)) and, at every iterate, measures
E_f(x^(k)) = ||W_f(x^(k)) / d(x^(k))||_p against the semilocal threshold.
The first iterate at or below the threshold is the certification index m;
from then on each iterate with E_f strictly below it carries the computable
error bound eps_k = alpha(E_f) ||W_f||_inf, and the run stops at the first
k >= m with eps_k < stop_eps.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence

from .apcx import PrecisionContext, exact_real, format_decimal
from .gauges import (alpha_fn, contraction_exponent, phi_N, psi_N, radius_R, radius_Rh,
                     radius_second, semilocal_threshold)
from .metrics import GaugeParams, PNorm, e_current, e_root, e_weier
from .operators import DomainFailure, high_order_T, weierstrass
from .polynomial import Polynomial
from ..config import SOLVER_CONFIG
from ..errors import (DegenerateDenominator, InsufficientTrace, NotCertified, ConfigError)
from ..utils import log_event

logger = logging.getLogger(__name__)

CONVERGED = 'Converged'
MAX_ITER_EXCEEDED = 'MaxIterExceeded'
DOMAIN_FAILURE = 'DomainFailure'


@dataclass(frozen=True)
class SolveConfig:
    N: int = 1
    pnorm: PNorm = PNorm('inf')
    precision_bits: int = 384
    stop_eps: Fraction = Fraction(1, 10 ** 15)
    max_iter: int = SOLVER_CONFIG['max_iter']
    compute_extra_iterate: bool = True

    def __post_init__(self):
        if self.N < 1:
            raise ConfigError(f"order parameter N must be >= 1, got {self.N}")
        object.__setattr__(self, 'pnorm', PNorm.parse(self.pnorm))
        eps = exact_real(self.stop_eps)
        if eps <= 0:
            raise ConfigError(f"stop_eps must be positive, got {self.stop_eps}")
        object.__setattr__(self, 'stop_eps', eps)
        if self.max_iter < 1:
            raise ConfigError(f"max_iter must be >= 1, got {self.max_iter}")

    @classmethod
    def from_digits(cls, digits: int, **kwargs) -> "SolveConfig":
        headroom = SOLVER_CONFIG['precision_headroom']
        return cls(precision_bits=PrecisionContext.from_digits(digits, headroom).precision_bits,
                   **kwargs)

    def context(self) -> PrecisionContext:
        return PrecisionContext(self.precision_bits)


@dataclass(frozen=True)
class IterateRecord:
    k: int
    x: tuple
    W: tuple
    Ef: object
    eps: Optional[object]
    certified: bool

    def to_json(self, digits: int) -> dict:
        return {
            "k": self.k,
            "Ef": format_decimal(self.Ef, digits),
            "eps": None if self.eps is None else format_decimal(self.eps, digits),
            "x": [[format_decimal(z.real, digits), format_decimal(z.imag, digits)] for z in self.x],
        }


@dataclass
class SolveReport:
    N: int
    pnorm: PNorm
    precision_bits: int
    threshold: object
    trace: List[IterateRecord] = field(default_factory=list)
    m: Optional[int] = None
    k_stop: Optional[int] = None
    eps_k: Optional[object] = None
    eps_k_plus_1: Optional[object] = None
    extra: Optional[IterateRecord] = None
    status: str = MAX_ITER_EXCEEDED
    failure: Optional[DomainFailure] = None

    @property
    def order_claim(self) -> int:
        return 2 * self.N + 1

    @property
    def converged(self) -> bool:
        return self.status == CONVERGED

    def record(self, k: int) -> IterateRecord:
        for rec in self.trace:
            if rec.k == k:
                return rec
        if self.extra is not None and self.extra.k == k:
            return self.extra
        raise KeyError(k)

    def iterates(self) -> List[IterateRecord]:
        """Trace plus the extra iterate, when one was computed."""
        return self.trace + ([self.extra] if self.extra is not None else [])

    def to_json(self, digits: Optional[int] = None) -> dict:
        if digits is None:
            digits = PrecisionContext(self.precision_bits).digits

        def real(v):
            return None if v is None else format_decimal(v, digits)

        data = {
            "status": self.status,
            "N": self.N,
            "p": str(self.pnorm),
            "precision_bits": self.precision_bits,
            "threshold": real(self.threshold),
            "m": self.m,
            "k": self.k_stop,
            "eps_k": real(self.eps_k),
            "eps_k1": real(self.eps_k_plus_1),
            "trace": [rec.to_json(digits) for rec in self.iterates()],
        }
        if self.failure is not None:
            data["failure"] = self.failure.to_json()
        return data


@dataclass(frozen=True)
class Certificate:
    certified: bool
    Ef: object
    threshold: object
    eps: Optional[object] = None


def _inf_norm(v: Sequence):
    return max(abs(e) for e in v)


def _bound_vector(W: Sequence, Ef, params: GaugeParams, ctx: PrecisionContext) -> tuple:
    alpha = alpha_fn(Ef, params, ctx)
    return tuple(alpha * abs(w) for w in W)


def certify_semilocal(f: Polynomial, x: Sequence, params: GaugeParams,
                      ctx: PrecisionContext) -> Certificate:
    """Check E_f(x) < 8 / (3 + sqrt(1 + 8a))^2 and, when it holds, the error bound."""
    result = weierstrass(f, x, ctx)
    if not result.in_domain:
        raise DegenerateDenominator(result.failure.describe())
    W = result.value
    Ef = e_weier(f, x, params.pnorm, ctx, W=W)
    threshold = semilocal_threshold(params, ctx)
    if Ef < threshold:
        return Certificate(True, Ef, threshold, _inf_norm(_bound_vector(W, Ef, params, ctx)))
    return Certificate(False, Ef, threshold)


def posteriori_bound_vector(f: Polynomial, x: Sequence, params: GaugeParams,
                            ctx: PrecisionContext) -> tuple:
    """Componentwise |x_i - xi_i| <= alpha(E_f(x)) |W_i(x)|."""
    result = weierstrass(f, x, ctx)
    if not result.in_domain:
        raise DegenerateDenominator(result.failure.describe())
    Ef = e_weier(f, x, params.pnorm, ctx, W=result.value)
    threshold = semilocal_threshold(params, ctx)
    if Ef >= threshold:
        raise NotCertified(f"E_f(x) = {Ef} is not below the threshold {threshold}")
    return _bound_vector(result.value, Ef, params, ctx)


def posteriori_bound(f: Polynomial, x: Sequence, params: GaugeParams, ctx: PrecisionContext):
    return _inf_norm(posteriori_bound_vector(f, x, params, ctx))


def _measure(f: Polynomial, x: tuple, k: int, params: GaugeParams, threshold,
             ctx: PrecisionContext):
    result = weierstrass(f, x, ctx)
    if not result.in_domain:
        return None, result.failure
    W = result.value
    Ef = ctx.ensure_finite(e_weier(f, x, params.pnorm, ctx, W=W))
    eps = None
    if Ef < threshold:
        eps = ctx.ensure_finite(_inf_norm(_bound_vector(W, Ef, params, ctx)))
    return IterateRecord(k, x, W, Ef, eps, Ef <= threshold), None


def _measure_extra(f: Polynomial, x: tuple, k: int, pnorm: PNorm, ctx: PrecisionContext):
    """Measure the iterate past the stop index in a wider context.

    Its bound is tight to a relative margin of about E_f, which lies below the
    working precision. W_f, E_f and eps use extra_iterate_factor times the bits;
    the components are lifted exactly.
    """
    fine = ctx.scaled(SOLVER_CONFIG['extra_iterate_factor'])
    params = GaugeParams.build(f.degree, pnorm, fine)
    return _measure(f, fine.vector(x), k, params, semilocal_threshold(params, fine), fine)


def solve(f: Polynomial, x0: Sequence, cfg: SolveConfig) -> SolveReport:
    ctx = cfg.context()
    x = ctx.vector(x0)
    if len(x) != f.degree:
        raise DegenerateDenominator(f"initial vector has {len(x)} components, degree is {f.degree}")
    params = GaugeParams.build(f.degree, cfg.pnorm, ctx)
    threshold = semilocal_threshold(params, ctx)
    stop_eps = ctx.real(cfg.stop_eps)
    report = SolveReport(cfg.N, cfg.pnorm, cfg.precision_bits, threshold)
    logger.debug("solve: n=%d N=%d p=%s bits=%d", f.degree, cfg.N, cfg.pnorm, cfg.precision_bits)

    k = 0
    while True:
        rec, failure = _measure(f, x, k, params, threshold, ctx)
        if failure is not None:
            return _domain_failure(report, failure, k)
        report.trace.append(rec)
        if report.m is None and rec.certified:
            report.m = k
            log_event(f"certified at m={k} (N={cfg.N}, n={f.degree})")
        if report.m is not None and rec.eps is not None and rec.eps < stop_eps:
            report.k_stop = k
            report.eps_k = rec.eps
            report.status = CONVERGED
            log_event(f"stopped at k={k} (N={cfg.N}, n={f.degree})")
            break
        if k >= cfg.max_iter:
            report.status = MAX_ITER_EXCEEDED
            log_event(f"no stop after {cfg.max_iter} iterations (N={cfg.N})", level=logging.WARNING)
            return report
        step = high_order_T(f, x, cfg.N, ctx)
        if not step.in_domain:
            return _domain_failure(report, step.failure, k)
        x = step.value
        k += 1

    if cfg.compute_extra_iterate:
        step = high_order_T(f, x, cfg.N, ctx)
        extra = None
        if step.in_domain:
            extra, failure = _measure_extra(f, step.value, k + 1, cfg.pnorm, ctx)
        else:
            failure = step.failure
        if extra is None:
            logger.warning("extra iterate unavailable: %s", failure.describe())
        else:
            report.extra = extra
            report.eps_k_plus_1 = extra.eps
    return report


def _domain_failure(report: SolveReport, failure: DomainFailure, k: int) -> SolveReport:
    report.status = DOMAIN_FAILURE
    report.failure = failure
    log_event(f"left the domain at k={k}: {failure.describe()}", level=logging.WARNING)
    return report


# -- local convergence checks (roots known) -----------------------------------

@dataclass(frozen=True)
class LocalCheck:
    """Outcome of a local convergence test and the envelope it promises.

    ``kind`` is 'first' (E against d(xi)), 'second' (E against d(x0)) or 'h'.
    ``lam`` is the per-step base of the first two kinds; the 'h' kind contracts
    by powers of ``h`` alone and leaves it None.
    """

    kind: str
    holds: bool
    E: object
    N: int
    lam: Optional[object] = None
    theta: Optional[object] = None
    h: Optional[object] = None

    def step_factor(self, k: int):
        """Factor c_k with ||x^(k+1) - xi|| <= c_k ||x^(k) - xi||."""
        order = 2 * self.N + 1
        if self.kind == "h":
            return (self.h * self.h) ** (self.N * order ** k)
        factor = self.lam ** (order ** k)
        if self.theta is not None:
            factor *= self.theta
        return factor

    def start_factor(self, k: int):
        """Factor with ||x^(k) - xi|| <= factor * ||x^(0) - xi||."""
        if self.kind == "h":
            base, exponent = self.h * self.h, Fraction((2 * self.N + 1) ** k - 1, 2)
        else:
            base, exponent = self.lam, contraction_exponent(self.N, k)
        mp = base.context
        factor = mp.power(base, mp.mpf(exponent.numerator) / exponent.denominator)
        if self.theta is not None:
            factor *= self.theta ** k
        return factor


def check_local_first(f: Polynomial, x0: Sequence, xi: Sequence, N: int, params: GaugeParams,
                      ctx: PrecisionContext) -> LocalCheck:
    E = e_root(x0, xi, params.pnorm, ctx)
    holds = E < radius_R(params, ctx)
    lam = phi_N(E, N, params, ctx) if holds else None
    return LocalCheck('first', holds, E, N, lam)


def check_local_second(f: Polynomial, x0: Sequence, xi: Sequence, N: int, params: GaugeParams,
                       ctx: PrecisionContext) -> LocalCheck:
    second = params.second_kind()
    E = e_current(x0, xi, params.pnorm, ctx)
    holds = E <= radius_second(second, ctx)
    if not holds:
        return LocalCheck('second', False, E, N)
    return LocalCheck('second', True, E, N, phi_N(E, N, second, ctx), psi_N(E, N, second, ctx))


def check_local_h(f: Polynomial, x0: Sequence, xi: Sequence, h, N: int, params: GaugeParams,
                  ctx: PrecisionContext) -> LocalCheck:
    """E(x0) < R_h guarantees per-step contraction by h^(2N(2N+1)^k)."""
    h = ctx.real(h)
    E = e_root(x0, xi, params.pnorm, ctx)
    holds = E < radius_Rh(h, params, ctx)
    return LocalCheck('h', holds, E, N, h=h)


@dataclass(frozen=True)
class Envelope:
    k: int
    i: int
    step_bound: object
    start_bound: object
    actual: object

    @property
    def holds(self) -> bool:
        return self.actual <= self.step_bound and self.actual <= self.start_bound


def local_envelopes(report: SolveReport, xi: Sequence, check: LocalCheck,
                    ctx: PrecisionContext) -> List[Envelope]:
    """(bound, actual) pairs for every component of every recorded step."""
    if not check.holds:
        raise NotCertified(f"local condition fails: E = {check.E}")
    xi = ctx.vector(xi)
    iterates = report.iterates()
    errors = [[abs(z - r) for z, r in zip(ctx.vector(rec.x), xi)] for rec in iterates]
    out = []
    for k in range(len(iterates) - 1):
        step = check.step_factor(k)
        start = check.start_factor(k + 1)
        for i, actual in enumerate(errors[k + 1]):
            out.append(Envelope(k + 1, i, step * errors[k][i], start * errors[0][i], actual))
    return out


# -- reference roots and order estimation --------------------------------------

def match_roots(x: Sequence, xi: Sequence) -> tuple:
    """Reorder xi so xi[i] is the nearest unused root to x[i]; ties go to the lowest index."""
    remaining = list(range(len(xi)))
    out = []
    for z in x:
        best = None
        for j in remaining:
            dist = abs(z - xi[j])
            if best is None or dist < best[0]:
                best = (dist, j)
        remaining.remove(best[1])
        out.append(xi[best[1]])
    return tuple(out)


def reference_roots(f: Polynomial, x: Sequence, ctx: PrecisionContext,
                    factor: Optional[int] = None) -> tuple:
    """Roots near the certified vector x, refined by the third-order method at factor x precision.

    The result is matched to x and accurate to 10^(-2 * ctx.digits).
    """
    if factor is None:
        factor = SOLVER_CONFIG['reference_factor']
    fine = ctx.scaled(factor)
    cfg = SolveConfig(N=1, precision_bits=fine.precision_bits,
                      stop_eps=Fraction(1, 10 ** (2 * ctx.digits)), compute_extra_iterate=False)
    report = solve(f, x, cfg)
    if not report.converged or report.m != 0:
        raise NotCertified(f"reference refinement did not certify ({report.status})")
    roots = report.trace[-1].x
    return match_roots(ctx.vector(x), roots)


def empirical_order(report: SolveReport, xi: Sequence, ctx: PrecisionContext):
    """log(e_{k+1}/e_k) / log(e_k/e_{k-1}) on the last triple of errors above the noise floor."""
    xi = ctx.vector(xi)
    floor = ctx.mp.mpf(10) ** -(max(ctx.digits - 10, 1))
    errors = []
    for rec in report.iterates():
        x = ctx.vector(rec.x)
        errors.append(max(abs(z - r) for z, r in zip(x, match_roots(x, xi))))
    for k in range(len(errors) - 2, 0, -1):
        e0, e1, e2 = errors[k - 1], errors[k], errors[k + 1]
        if min(e0, e1, e2) > floor and e1 != e0:
            return ctx.mp.log(e2 / e1) / ctx.mp.log(e1 / e0)
    raise InsufficientTrace("need three consecutive nonzero errors above the precision floor")

