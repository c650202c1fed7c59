"""
Vector norms, component distances and the functions of initial conditions.

Real vectors are plain tuples of mpmath reals; complex vectors are tuples of
mpmath complex values produced by one PrecisionContext.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional, Sequence

from .apcx import PrecisionContext
from .operators import weierstrass
from ..errors import DegenerateDenominator, ParseError

INF = 'inf'


@dataclass(frozen=True)
class PNorm:
    """An l_p norm with 1 <= p <= inf; ``p`` is a Fraction or the string 'inf'."""

    p: object

    def __post_init__(self):
        if self.p == INF:
            return
        try:
            p = Fraction(self.p)
        except (TypeError, ValueError):
            raise ParseError(f"p must be a rational >= 1 or 'inf', got {self.p!r}")
        if p < 1:
            raise ParseError(f"p must be >= 1, got {p}")
        object.__setattr__(self, 'p', p)

    @classmethod
    def parse(cls, text) -> "PNorm":
        if isinstance(text, PNorm):
            return text
        s = str(text).strip().lower()
        if s in ('inf', 'infinity', '∞', 'oo'):
            return cls(INF)
        try:
            return cls(Fraction(s))
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"cannot read a norm exponent from {text!r}")

    @property
    def is_inf(self) -> bool:
        return self.p == INF

    @property
    def inv_q(self) -> Fraction:
        """1/q = 1 - 1/p (1 for p = inf, 0 for p = 1)."""
        if self.is_inf:
            return Fraction(1)
        return 1 - 1 / self.p

    def __str__(self):
        if self.is_inf:
            return 'inf'
        return str(self.p)


@dataclass(frozen=True)
class GaugeParams:
    """Degree, norm and the constants a = (n-1)^(1/q), b = 2^(1/q)."""

    n: int
    pnorm: PNorm
    a: object
    b: object

    @classmethod
    def build(cls, n: int, pnorm, ctx: PrecisionContext) -> "GaugeParams":
        if n < 2:
            raise ParseError(f"degree must be >= 2, got {n}")
        pnorm = PNorm.parse(pnorm)
        return cls(n, pnorm, ctx.root(n - 1, pnorm.inv_q), ctx.root(2, pnorm.inv_q))

    def second_kind(self) -> "GaugeParams":
        """Same a with b = 2; the constants used once E is measured against d(x)."""
        return replace(self, b=self.b.context.mpf(2))


def cone_norm(x: Sequence) -> tuple:
    return tuple(abs(v) for v in x)


def p_norm(v: Sequence, pn: PNorm, ctx: PrecisionContext):
    values = [ctx.real(abs(e)) for e in v]
    if not values:
        return ctx.mp.mpf(0)
    if pn.is_inf:
        return max(values)
    if pn.p == 1:
        return ctx.mp.fsum(values)
    total = ctx.mp.fsum(ctx.root(e, pn.p) for e in values)
    return ctx.root(total, 1 / pn.p)


def dvec(x: Sequence, ctx: PrecisionContext) -> tuple:
    """d_i(x) = min over j != i of |x_i - x_j|."""
    values = ctx.vector(x)
    n = len(values)
    if n < 2:
        raise DegenerateDenominator("d(x) needs at least two components")
    best = [None] * n
    for i in range(n):
        for j in range(i + 1, n):
            dist = abs(values[i] - values[j])
            if best[i] is None or dist < best[i]:
                best[i] = dist
            if best[j] is None or dist < best[j]:
                best[j] = dist
    return tuple(best)


def ratio_vec(x: Sequence, y: Sequence) -> tuple:
    """(|x_1|/y_1, ..., |x_n|/y_n)."""
    if len(x) != len(y):
        raise DegenerateDenominator(f"length mismatch {len(x)} != {len(y)}")
    out = []
    for i, (xv, yv) in enumerate(zip(x, y)):
        if yv == 0:
            raise DegenerateDenominator(f"zero denominator at component {i + 1}")
        out.append(abs(xv) / yv)
    return tuple(out)


def precedes(u: Sequence, v: Sequence) -> bool:
    """Coordinate-wise u <= v."""
    if len(u) != len(v):
        return False
    return all(a <= b for a, b in zip(u, v))


def _difference(x: Sequence, xi: Sequence, ctx: PrecisionContext) -> tuple:
    x = ctx.vector(x)
    xi = ctx.vector(xi)
    if len(x) != len(xi):
        raise DegenerateDenominator(f"length mismatch {len(x)} != {len(xi)}")
    return tuple(a - b for a, b in zip(x, xi))


def e_root(x: Sequence, xi: Sequence, pn: PNorm, ctx: PrecisionContext):
    """|| (x - xi) / d(xi) ||_p, measured against the (known) roots."""
    return p_norm(ratio_vec(_difference(x, xi, ctx), dvec(xi, ctx)), pn, ctx)


def e_current(x: Sequence, xi: Sequence, pn: PNorm, ctx: PrecisionContext):
    """|| (x - xi) / d(x) ||_p, measured against the current approximation."""
    return p_norm(ratio_vec(_difference(x, xi, ctx), dvec(x, ctx)), pn, ctx)


def e_weier(f, x: Sequence, pn: PNorm, ctx: PrecisionContext, W: Optional[Sequence] = None):
    """|| W_f(x) / d(x) ||_p, computable without knowing the roots.

    Pass a precomputed Weierstrass correction as ``W`` to skip re-evaluating f.
    """
    if W is None:
        result = weierstrass(f, x, ctx)
        if not result.in_domain:
            raise DegenerateDenominator(result.failure.describe())
        W = result.value
    return p_norm(ratio_vec(W, dvec(x, ctx)), pn, ctx)
