"""
Complex polynomials with exact coefficients.

Coefficients are stored leading-first as exact (re, im) Fraction pairs and are
materialised once per working precision, so the same polynomial can be solved
at 128 bits for a quick check and at 20 000 bits for a table row.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Sequence, Tuple

from .apcx import ExactComplex, PrecisionContext, exact_complex, exact_real, format_exact
from ..errors import PolynomialError

_ZERO = (Fraction(0), Fraction(0))


def _cmul(a: ExactComplex, b: ExactComplex) -> ExactComplex:
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


@dataclass(frozen=True)
class Polynomial:
    """f(z) = a0 z^n + a1 z^(n-1) + ... + an with a0 != 0.

    Solve targets must have degree n >= 2; objects produced by
    :func:`derivative` set ``derived`` and are exempt from that rule.
    """

    coeffs: Tuple[ExactComplex, ...]
    derived: bool = False
    _materialised: Dict[int, tuple] = field(default_factory=dict, init=False, repr=False,
                                            compare=False, hash=False)

    def __post_init__(self):
        coeffs = tuple(exact_complex(c) for c in self.coeffs)
        object.__setattr__(self, 'coeffs', coeffs)
        if not coeffs:
            raise PolynomialError("a polynomial needs at least one coefficient")
        if coeffs[0] == _ZERO:
            raise PolynomialError("leading coefficient a0 must be nonzero")
        if not self.derived and len(coeffs) < 3:
            raise PolynomialError(f"degree must be >= 2, got {len(coeffs) - 1}")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> ExactComplex:
        return self.coeffs[0]

    def monic_coefficient(self, k: int) -> ExactComplex:
        """a_k / a_0, exactly."""
        a0r, a0i = self.coeffs[0]
        akr, aki = self.coeffs[k]
        norm = a0r * a0r + a0i * a0i
        return ((akr * a0r + aki * a0i) / norm, (aki * a0r - akr * a0i) / norm)

    def at(self, ctx: PrecisionContext) -> tuple:
        """Coefficients rounded once to the precision of ctx (cached per precision)."""
        cached = self._materialised.get(ctx.precision_bits)
        if cached is None:
            cached = tuple(ctx.from_exact(c) for c in self.coeffs)
            self._materialised[ctx.precision_bits] = cached
        return cached

    # -- JSON --------------------------------------------------------------

    def to_json(self) -> dict:
        flat = []
        for re, im in self.coeffs:
            flat.extend((format_exact(re), format_exact(im)))
        return {"degree": self.degree, "coeffs": flat}

    @classmethod
    def from_json(cls, data: dict) -> "Polynomial":
        try:
            degree = int(data["degree"])
            flat = list(data["coeffs"])
        except (KeyError, TypeError, ValueError) as e:
            raise PolynomialError(f"malformed polynomial JSON: {e}")
        if len(flat) != 2 * (degree + 1):
            raise PolynomialError(
                f"degree {degree} needs {2 * (degree + 1)} coefficient strings, got {len(flat)}")
        pairs = [(exact_real(flat[2 * i]), exact_real(flat[2 * i + 1])) for i in range(degree + 1)]
        return cls(tuple(pairs))

    @classmethod
    def from_coefficients(cls, values: Iterable) -> "Polynomial":
        return cls(tuple(values))


def evaluate(f: Polynomial, z, ctx: PrecisionContext):
    """f(z) by Horner's rule at ctx precision."""
    coeffs = f.at(ctx)
    z = ctx.complex(z)
    acc = coeffs[0]
    for c in coeffs[1:]:
        acc = acc * z + c
    return acc


def evaluate_with_derivative(f: Polynomial, z, ctx: PrecisionContext):
    """(f(z), f'(z)) in one Horner pass; f(z) is bit-identical to evaluate()."""
    coeffs = f.at(ctx)
    z = ctx.complex(z)
    acc = coeffs[0]
    dacc = ctx.zero
    for c in coeffs[1:]:
        dacc = dacc * z + acc
        acc = acc * z + c
    return acc, dacc


def derivative(f: Polynomial) -> Polynomial:
    n = f.degree
    if n < 1:
        raise PolynomialError("derivative of a constant is not represented")
    coeffs = tuple((re * (n - k), im * (n - k)) for k, (re, im) in enumerate(f.coeffs[:-1]))
    return Polynomial(coeffs, derived=True)


def from_roots(roots: Sequence, leading=1) -> Polynomial:
    """Exact expansion of leading * prod(z - root)."""
    lead = exact_complex(leading)
    if lead == _ZERO:
        raise PolynomialError("leading coefficient must be nonzero")
    coeffs = [lead]
    for root in roots:
        r = exact_complex(root)
        nxt = list(coeffs) + [_ZERO]
        for k, c in enumerate(coeffs):
            prod = _cmul(c, r)
            nxt[k + 1] = (nxt[k + 1][0] - prod[0], nxt[k + 1][1] - prod[1])
        coeffs = nxt
    return Polynomial(tuple(coeffs), derived=len(coeffs) < 3)


def wilkinson(n: int = 20) -> Polynomial:
    return from_roots(range(1, n + 1))


def sep(roots: Sequence, ctx: PrecisionContext):
    """Minimum pairwise distance |xi_i - xi_j| over i != j."""
    values = ctx.vector(roots)
    if len(values) < 2:
        raise PolynomialError("sep needs at least two roots")
    best = None
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            dist = abs(values[i] - values[j])
            if best is None or dist < best:
                best = dist
    return best


def is_root_vector(f: Polynomial, roots: Sequence, ctx: PrecisionContext, tol=None) -> bool:
    """Check f(z) = a0 prod(z - xi_i) at n+1 sample points, relative to max(|f(z)|, 1)."""
    values = ctx.vector(roots)
    if len(values) != f.degree:
        return False
    if tol is None:
        tol = ctx.mp.ldexp(ctx.mp.mpf(1), -(ctx.precision_bits // 2))
    lead = f.at(ctx)[0]
    for k in range(f.degree + 1):
        z = ctx.complex(Fraction(k + 1, 3), Fraction(2 * k - 1, 5))
        fz = evaluate(f, z, ctx)
        prod = lead
        for xi in values:
            prod = prod * (z - xi)
        scale = max(abs(fz), ctx.mp.mpf(1))
        if abs(fz - prod) > tol * scale:
            return False
    return True
