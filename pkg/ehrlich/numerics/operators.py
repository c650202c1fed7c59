"""
Iteration operators: the Weierstrass correction, the classical Ehrlich step and
the high-order family T^(N).

Operators never raise on leaving their domain. They return an OperatorResult
with ``in_domain=False`` and a DomainFailure naming the level and the offending
components; the whole step is discarded in that case.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .apcx import PrecisionContext
from .polynomial import Polynomial, evaluate, evaluate_with_derivative
from ..errors import DomainError

DUPLICATE_COMPONENTS = 'DuplicateComponents'
HASH_VIOLATION = 'HashViolation'
ZERO_DENOMINATOR = 'ZeroDenominator'


@dataclass(frozen=True)
class DomainFailure:
    reason: str
    level: int = 0
    i: Optional[int] = None
    j: Optional[int] = None

    def describe(self) -> str:
        # 1-based component indices in messages
        where = []
        if self.level:
            where.append(f"level {self.level}")
        if self.i is not None:
            where.append(f"i={self.i + 1}")
        if self.j is not None:
            where.append(f"j={self.j + 1}")
        return f"{self.reason} ({', '.join(where)})" if where else self.reason

    def to_json(self) -> dict:
        return {"reason": self.reason, "level": self.level, "i": self.i, "j": self.j}


@dataclass(frozen=True)
class OperatorResult:
    value: Optional[Tuple] = None
    failure: Optional[DomainFailure] = None

    @property
    def in_domain(self) -> bool:
        return self.failure is None

    @classmethod
    def fail(cls, reason: str, level: int = 0, i=None, j=None) -> "OperatorResult":
        return cls(None, DomainFailure(reason, level, i, j))


def _duplicate(x: Sequence) -> Optional[Tuple[int, int]]:
    n = len(x)
    for i in range(n):
        for j in range(i + 1, n):
            if x[i] == x[j]:
                return i, j
    return None


def _hash_violation(x: Sequence, y: Sequence) -> Optional[Tuple[int, int]]:
    for i, xv in enumerate(x):
        for j, yv in enumerate(y):
            if i != j and xv == yv:
                return i, j
    return None


def check_hash(x: Sequence, y: Sequence) -> bool:
    """x # y: x_i != y_j for all i != j (x_i == y_i is allowed)."""
    if len(x) != len(y):
        raise ValueError(f"length mismatch {len(x)} != {len(y)}")
    return _hash_violation(x, y) is None


def weierstrass(f: Polynomial, x: Sequence, ctx: PrecisionContext) -> OperatorResult:
    """W_i(x) = f(x_i) / (a0 prod_{j != i} (x_i - x_j))."""
    x = ctx.vector(x)
    dup = _duplicate(x)
    if dup is not None:
        return OperatorResult.fail(DUPLICATE_COMPONENTS, 0, *dup)
    a0 = f.at(ctx)[0]
    out = []
    for i, xi in enumerate(x):
        prod = a0
        for j, xj in enumerate(x):
            if j != i:
                prod *= xi - xj
        out.append(evaluate(f, xi, ctx) / prod)
    return OperatorResult(tuple(out))


def _level_step(x: Sequence, values: Sequence, inner: Sequence, level: int) -> OperatorResult:
    # One application of x_i - f / (f' - f * sum_{j != i} 1 / (x_i - inner_j)).
    out = []
    for i, xi in enumerate(x):
        fx, dfx = values[i]
        if fx == 0:
            out.append(xi)
            continue
        acc = 0
        for j, yj in enumerate(inner):
            if j != i:
                acc += 1 / (xi - yj)
        den = dfx - fx * acc
        if den == 0:
            return OperatorResult.fail(ZERO_DENOMINATOR, level, i)
        out.append(xi - fx / den)
    return OperatorResult(tuple(out))


def _f_values(f: Polynomial, x: Sequence, ctx: PrecisionContext) -> List:
    return [evaluate_with_derivative(f, xi, ctx) for xi in x]


def ehrlich_T(f: Polynomial, x: Sequence, ctx: PrecisionContext) -> OperatorResult:
    """Classical Ehrlich (Aberth) step, third order."""
    x = ctx.vector(x)
    dup = _duplicate(x)
    if dup is not None:
        return OperatorResult.fail(DUPLICATE_COMPONENTS, 1, *dup)
    return _level_step(x, _f_values(f, x, ctx), x, 1)


def high_order_T(f: Polynomial, x: Sequence, N: int, ctx: PrecisionContext) -> OperatorResult:
    """T^(N)(x), evaluated level by level from T^(0)(x) = x.

    Level L needs x # T^(L-1)(x) and nonzero denominators; f and f' are
    evaluated once per component and shared by every level.
    """
    if N < 0:
        raise ValueError(f"N must be >= 0, got {N}")
    x = ctx.vector(x)
    if N == 0:
        return OperatorResult(x)
    values = _f_values(f, x, ctx)
    inner = x
    for level in range(1, N + 1):
        bad = _hash_violation(x, inner)
        if bad is not None:
            return OperatorResult.fail(HASH_VIOLATION, level, *bad)
        result = _level_step(x, values, inner, level)
        if not result.in_domain:
            return result
        inner = result.value
    return OperatorResult(inner)


def fixed_component_rule(f: Polynomial, x: Sequence, i: int, ctx: PrecisionContext, N: int = 1):
    """Component i of T^(N)(x); x_i itself when f(x_i) = 0."""
    x = ctx.vector(x)
    if evaluate(f, x[i], ctx) == 0:
        return x[i]
    result = high_order_T(f, x, N, ctx)
    if not result.in_domain:
        raise DomainError(result.failure.describe())
    return result.value[i]


def sigma_vector(x: Sequence, inner: Sequence, xi: Sequence, ctx: PrecisionContext) -> tuple:
    """sigma_i = (x_i - xi_i) sum_{j != i} (inner_j - xi_j) / ((x_i - xi_j)(x_i - inner_j)).

    With inner = T^(N)(x): T^(N+1)_i(x) - xi_i = -sigma_i / (1 - sigma_i) (x_i - xi_i).
    """
    x, inner, xi = ctx.vector(x), ctx.vector(inner), ctx.vector(xi)
    out = []
    for i in range(len(x)):
        acc = ctx.zero
        for j in range(len(x)):
            if j != i:
                acc += (inner[j] - xi[j]) / ((x[i] - xi[j]) * (x[i] - inner[j]))
        out.append((x[i] - xi[i]) * acc)
    return tuple(out)
