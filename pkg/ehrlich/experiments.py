"""
Built-in experiments, Aberth starting vectors and table runs.

Each experiment carries its polynomial, how its starting vector is built, the
table rows it supports and, per row, the decimal exponent of the smallest
bound the row reports. That exponent sizes the working precision of the row.
"""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .config import SOLVER_CONFIG, default_digits, default_workers
from .errors import EhrlichError, ExperimentError
from .numerics.apcx import (ExactComplex, PrecisionContext, exact_complex, format_complex_fixed,
                            format_fixed, format_sci)
from .numerics.gauges import semilocal_threshold
from .numerics.metrics import GaugeParams, PNorm
from .numerics.polynomial import Polynomial, wilkinson
from .numerics.solver import SolveConfig, SolveReport, certify_semilocal, solve
from .utils import log_event

logger = logging.getLogger(__name__)


def aberth_init(n: int, a1, r0, ctx: PrecisionContext) -> tuple:
    """x_v = -a1/n + r0 exp(i theta_v), theta_v = (pi/n)(2v - 3/2), v = 1..n."""
    if n < 2:
        raise ExperimentError(f"Aberth start needs n >= 2, got {n}")
    r0 = ctx.real(r0)
    if r0 <= 0:
        raise ExperimentError(f"Aberth radius must be positive, got {r0}")
    center = -ctx.complex(a1) / n
    pi = ctx.pi
    return tuple(center + r0 * ctx.expj(pi * ctx.real(Fraction(4 * v - 3, 2 * n)))
                 for v in range(1, n + 1))


@dataclass(frozen=True)
class Aberth:
    """Aberth circle; ``a1=None`` takes a1/a0 from the polynomial."""

    r0: Fraction
    a1: Optional[ExactComplex] = None

    def build(self, f: Polynomial, ctx: PrecisionContext) -> tuple:
        a1 = self.a1 if self.a1 is not None else f.monic_coefficient(1)
        return aberth_init(f.degree, ctx.from_exact(exact_complex(a1)), self.r0, ctx)

    def describe(self) -> str:
        a1 = 'a1 of f' if self.a1 is None else f"a1={self.a1[0]}"
        return f"Aberth({a1}, r0={self.r0})"


@dataclass(frozen=True)
class Explicit:
    values: Tuple[ExactComplex, ...]

    def build(self, f: Polynomial, ctx: PrecisionContext) -> tuple:
        if len(self.values) != f.degree:
            raise ExperimentError(f"{len(self.values)} starting values for degree {f.degree}")
        return tuple(ctx.from_exact(v) for v in self.values)

    def describe(self) -> str:
        return 'explicit'


@dataclass(frozen=True)
class Experiment:
    name: str
    title: str
    polynomial: Polynomial
    init: object
    table_rows: Tuple[int, ...]
    extended_rows: Tuple[int, ...] = ()
    # decimal exponent of eps_{k+1} per row
    bound_exponents: Dict[int, int] = field(default_factory=dict)
    published_E0: Optional[str] = None
    aliases: Tuple[str, ...] = ()

    @property
    def n(self) -> int:
        return self.polynomial.degree

    def initial(self, ctx: PrecisionContext) -> tuple:
        return self.init.build(self.polynomial, ctx)

    def rows(self, extended: bool = False) -> Tuple[int, ...]:
        return self.table_rows + (self.extended_rows if extended else ())

    def digits_for(self, N: int) -> int:
        """Row precision: |exponent of eps_{k+1}| plus padding; default_digits() off-plan."""
        exponent = self.bound_exponents.get(N)
        if exponent is None:
            return default_digits()
        return abs(exponent) + SOLVER_CONFIG['plan_padding_digits']

    def to_json(self) -> dict:
        ctx = PrecisionContext.from_digits(30)
        params = GaugeParams.build(self.n, PNorm('inf'), ctx)
        return {
            "name": self.name,
            "title": self.title,
            "aliases": list(self.aliases),
            "degree": self.n,
            "init": self.init.describe(),
            "rows": list(self.table_rows),
            "extended_rows": list(self.extended_rows),
            "threshold": format_fixed(semilocal_threshold(params, ctx), SOLVER_CONFIG['table_digits']),
        }


def _monomial_sum(degree: int, terms: Dict[int, int]) -> Polynomial:
    coeffs = [0] * (degree + 1)
    for power, c in terms.items():
        coeffs[degree - power] = c
    return Polynomial.from_coefficients(coeffs)


def builtin_experiments() -> List[Experiment]:
    ten = tuple(range(1, 11))
    return [
        Experiment(
            'ex71', 'z^4 - 1, explicit start',
            _monomial_sum(4, {4: 1, 0: -1}),
            Explicit(tuple(exact_complex(v) for v in (
                ('0.5', '0.5'), ('-1.36', '0.42'), ('-0.25', '1.28'), ('0.46', '-1.37')))),
            ten, (100,),
            {1: -63, 2: -193, 3: -744, 4: -230, 5: -407, 6: -657, 7: -1002, 8: -1439,
             9: -2002, 10: -2683, 100: -11451},
            '0.506619', ('quartic',)),
        Experiment(
            'ex72', 'z^15 + z^14 + 1, Aberth start',
            _monomial_sum(15, {15: 1, 14: 1, 0: 1}),
            Aberth(Fraction(2), exact_complex(1)),
            ten, (30,),
            {1: -106, 2: -134, 3: -197, 4: -827, 5: -248, 6: -565, 7: -1138, 8: -2080,
             9: -3530, 10: -5644, 30: -15106},
            '0.179999', ('trinomial15',)),
        Experiment(
            'ex73', 'Wilkinson polynomial prod (z - j), j = 1..20, Aberth start',
            wilkinson(20),
            Aberth(Fraction(20)),
            ten, (30,),
            {1: -114, 2: -230, 3: -596, 4: -184, 5: -1808, 6: -612, 7: -249, 8: -503,
             9: -958, 10: -2768, 30: -13777},
            '0.344409', ('wilkinson20',)),
        Experiment(
            'ex74', 'z^40 - 1, Aberth start',
            _monomial_sum(40, {40: 1, 0: -1}),
            Aberth(Fraction(2), exact_complex(0)),
            ten, (30,),
            {1: -52, 2: -144, 3: -213, 4: -344, 5: -208, 6: -900, 7: -2918, 8: -495,
             9: -1190, 10: -2580, 30: -1987},
            '0.159318', ('unity40',)),
    ]


def get_experiment(name: str) -> Experiment:
    for exp in builtin_experiments():
        if name == exp.name or name in exp.aliases:
            return exp
    raise ExperimentError(f"unknown experiment {name!r}")


@dataclass
class TableRow:
    N: int
    digits: int
    m: Optional[int] = None
    Ef_m: object = None
    eps_m: object = None
    k: Optional[int] = None
    eps_k: object = None
    eps_k1: object = None
    status: str = ''
    error: Optional[str] = None

    @classmethod
    def from_report(cls, N: int, digits: int, report: SolveReport) -> "TableRow":
        row = cls(N, digits, status=report.status)
        if report.m is not None:
            rec = report.record(report.m)
            row.m, row.Ef_m, row.eps_m = report.m, rec.Ef, rec.eps
        row.k, row.eps_k, row.eps_k1 = report.k_stop, report.eps_k, report.eps_k_plus_1
        if report.failure is not None:
            row.error = report.failure.describe()
        return row

    @property
    def ok(self) -> bool:
        return self.error is None and self.status == 'Converged'

    def formatted(self) -> Dict[str, str]:
        """Six decimals for E_f (truncated), six-digit mantissas for the bounds."""
        places = SOLVER_CONFIG['table_digits']

        def sci(v):
            return '' if v is None else format_sci(v, places)

        return {
            'N': str(self.N),
            'm': '' if self.m is None else str(self.m),
            'Ef_m': '' if self.Ef_m is None else format_fixed(self.Ef_m, places, truncate=True),
            'eps_m': sci(self.eps_m),
            'k': '' if self.k is None else str(self.k),
            'eps_k': sci(self.eps_k),
            'eps_k1': sci(self.eps_k1),
            'status': self.status,
            'error': self.error or '',
        }


TABLE_COLUMNS = ('N', 'm', 'Ef_m', 'eps_m', 'k', 'eps_k', 'eps_k1', 'status', 'error')


def run_row(exp: Experiment, N: int, digits: Optional[int] = None,
            pnorm='inf', max_iter: Optional[int] = None) -> Tuple[TableRow, Optional[SolveReport]]:
    digits = digits or exp.digits_for(N)
    kwargs = {'N': N, 'pnorm': pnorm}
    if max_iter is not None:
        kwargs['max_iter'] = max_iter
    cfg = SolveConfig.from_digits(digits, **kwargs)
    log_event(f"{exp.name} row N={N} at {digits} digits", tool_name='table')
    try:
        x0 = exp.initial(cfg.context())
        report = solve(exp.polynomial, x0, cfg)
    except EhrlichError as e:
        log_event(f"{exp.name} row N={N} failed: {e}", tool_name='table', level=logging.ERROR)
        return TableRow(N, digits, status='Error', error=str(e)), None
    row = TableRow.from_report(N, digits, report)
    log_event(f"{exp.name} row N={N}: m={row.m} k={row.k} {row.status}", tool_name='table')
    return row, report


def run_table(exp: Experiment, rows: Optional[Sequence[int]] = None, workers: Optional[int] = None,
              digits: Optional[int] = None, extended: bool = False) -> List[TableRow]:
    """One solve per N; rows come back in the requested order."""
    allowed = exp.rows(extended=True)
    rows = list(rows) if rows is not None else list(exp.rows(extended))
    for N in rows:
        if N not in allowed:
            raise ExperimentError(f"{exp.name} has no row N={N}")
    workers = workers or default_workers()
    if workers <= 1 or len(rows) <= 1:
        return [run_row(exp, N, digits)[0] for N in rows]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(run_row, exp, N, digits) for N in rows]
        return [fut.result()[0] for fut in futures]


def iterate_listing(digits: Optional[int] = None, decimals: Optional[int] = None) -> List[Tuple[int, List[str]]]:
    """Iterates x^(0), x^(1), x^(2) of ex71 under T^(10), listed to 15 truncated decimals."""
    exp = get_experiment('ex71')
    decimals = decimals or SOLVER_CONFIG['iterate_digits']
    cfg = SolveConfig.from_digits(digits or default_digits(), N=10, compute_extra_iterate=False)
    report = solve(exp.polynomial, exp.initial(cfg.context()), cfg)
    return [(rec.k, [format_complex_fixed(z, decimals, truncate=True) for z in rec.x]) for rec in report.trace[:3]]


def initial_certificate(exp: Experiment, pnorm='inf', digits: Optional[int] = None):
    """E_f(x^(0)) and the threshold for an experiment's starting vector."""
    ctx = PrecisionContext.from_digits(digits or default_digits())
    params = GaugeParams.build(exp.n, pnorm, ctx)
    return certify_semilocal(exp.polynomial, exp.initial(ctx), params, ctx)
