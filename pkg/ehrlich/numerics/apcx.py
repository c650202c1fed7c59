"""
Arbitrary-precision complex arithmetic.

Every number handled by the solver is an mpmath ``mpf``/``mpc`` created by the
private ``MPContext`` of a :class:`PrecisionContext`. mpmath values remember the
context that made them, so arithmetic between them rounds to that context's
precision and two solves at different precisions never share state.

Inputs are kept exact until the last moment: decimal literals such as
``"0.506619"`` or ``"-1.36"`` become Fractions and are rounded once, when a
context materialises them.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Tuple

from mpmath import libmp
from mpmath.ctx_mp import MPContext

from ..errors import DivisionByZero, DomainError, ParseError, PrecisionError

MIN_PRECISION_BITS = 64
LOG2_10 = math.log2(10)
ROUND_NEAREST = libmp.round_nearest
# places rounded away before chopping, so a ...999 tail below them prints as the next decimal
TRUNCATE_GUARD_DIGITS = 10

ExactComplex = Tuple[Fraction, Fraction]


def _normalise_literal(text: str) -> str:
    return text.strip().replace('−', '-').replace(' ', '').replace('_', '')


def exact_real(value) -> Fraction:
    """Exact rational value of a literal, int, Fraction, float or mpmath real."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ParseError(f"not a number: {value!r}")
    if isinstance(value, (int, float)):
        if isinstance(value, float) and not math.isfinite(value):
            raise ParseError(f"not a finite number: {value!r}")
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(_normalise_literal(value))
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"not a decimal number: {value!r}")
    raw = getattr(value, '_mpf_', None)
    if raw is not None:
        if raw in (libmp.finf, libmp.fninf, libmp.fnan):
            raise ParseError(f"not a finite number: {value!r}")
        return Fraction(*libmp.to_rational(raw))
    raise ParseError(f"cannot read a real number from {type(value).__name__}")


def exact_complex(value) -> ExactComplex:
    """Exact (re, im) pair from a real literal, an (re, im) pair or a complex value."""
    if isinstance(value, (tuple, list)):
        if len(value) != 2:
            raise ParseError(f"complex pair must have two entries, got {len(value)}")
        return exact_real(value[0]), exact_real(value[1])
    if isinstance(value, complex):
        return exact_real(value.real), exact_real(value.imag)
    raw = getattr(value, '_mpc_', None)
    if raw is not None:
        re, im = raw
        return (exact_real(_RawReal(re)), exact_real(_RawReal(im)))
    return exact_real(value), Fraction(0)


class _RawReal:
    __slots__ = ('_mpf_',)

    def __init__(self, raw):
        self._mpf_ = raw


@dataclass(frozen=True)
class PrecisionContext:
    """Binary working precision plus the mpmath context that enforces it.

    Rounding is always round-to-nearest-even.
    """

    precision_bits: int
    mp: MPContext = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.precision_bits, int) or self.precision_bits < MIN_PRECISION_BITS:
            raise PrecisionError(
                f"precision_bits must be an integer >= {MIN_PRECISION_BITS}, got {self.precision_bits!r}")
        mp = MPContext()
        mp.prec = self.precision_bits
        object.__setattr__(self, 'mp', mp)

    @classmethod
    def from_digits(cls, digits: int, headroom: float = 1.2) -> "PrecisionContext":
        """ceil(headroom * log2(10) * digits) bits, never below the 64-bit floor."""
        if digits < 1:
            raise PrecisionError(f"digits must be positive, got {digits}")
        bits = math.ceil(headroom * LOG2_10 * digits)
        return cls(max(bits, MIN_PRECISION_BITS))

    @property
    def digits(self) -> int:
        return self.mp.dps

    def scaled(self, factor: int) -> "PrecisionContext":
        return PrecisionContext(self.precision_bits * factor)

    # -- construction ----------------------------------------------------

    def real(self, value):
        """Round an exact value (see exact_real) once to this precision."""
        if getattr(value, 'context', None) is self.mp and hasattr(value, '_mpf_'):
            return value
        q = exact_real(value)
        return self.mp.make_mpf(libmp.from_rational(q.numerator, q.denominator,
                                                    self.precision_bits, ROUND_NEAREST))

    def complex(self, re, im=None):
        if im is None:
            if getattr(re, 'context', None) is self.mp and hasattr(re, '_mpc_'):
                return re
            re, im = exact_complex(re)
        return self.mp.make_mpc((self.real(re)._mpf_, self.real(im)._mpf_))

    def from_exact(self, pair: ExactComplex):
        return self.complex(pair[0], pair[1])

    def vector(self, values):
        return tuple(self.complex(v) for v in values)

    def parse_complex(self, text: str):
        """Read "re,im" or a bare real literal."""
        parts = [p for p in text.split(',')]
        if len(parts) == 1:
            return self.complex(parts[0])
        if len(parts) == 2:
            return self.complex(parts[0], parts[1])
        raise ParseError(f"expected 're,im', got {text!r}")

    @property
    def zero(self):
        return self.mp.mpc(0)

    @property
    def one(self):
        return self.mp.mpc(1)

    # -- field operations --------------------------------------------------

    def add(self, a, b):
        return self.complex(a) + self.complex(b)

    def sub(self, a, b):
        return self.complex(a) - self.complex(b)

    def mul(self, a, b):
        return self.complex(a) * self.complex(b)

    def neg(self, a):
        return -self.complex(a)

    def div(self, a, b):
        b = self.complex(b)
        if b == 0:
            raise DivisionByZero("division by exact zero")
        return self.complex(a) / b

    def modulus(self, a):
        return abs(self.complex(a))

    # -- real functions ------------------------------------------------------

    def sqrt(self, t):
        t = self.real(t)
        if t < 0:
            raise DomainError(f"sqrt of negative real {format_sci(t)}")
        return self.mp.sqrt(t)

    @property
    def pi(self):
        return +self.mp.pi

    def sin(self, t):
        return self.mp.sin(self.real(t))

    def cos(self, t):
        return self.mp.cos(self.real(t))

    def expj(self, t):
        """exp(i t) for real t."""
        return self.mp.expj(self.real(t))

    def root(self, t, exponent: Fraction):
        """t ** exponent for a rational exponent (pow(t, 1/q) with 0**0 = 1)."""
        exponent = exact_real(exponent)
        t = self.real(t)
        if exponent == 0:
            return self.mp.mpf(1)
        if exponent.denominator == 1:
            return t ** int(exponent)
        if t < 0:
            raise DomainError("fractional power of a negative real")
        return self.mp.power(t, self.real(exponent))

    def log(self, t):
        t = self.real(t)
        if t <= 0:
            raise DomainError("log of a nonpositive real")
        return self.mp.log(t)

    def ensure_finite(self, z):
        if not self.mp.isfinite(z):
            raise DomainError(f"non-finite value {z!r}")
        return z


# -- decimal output ------------------------------------------------------------

def format_sci(x, digits: int = 6) -> str:
    """Scientific notation "m.dddddd" + "e±X" with `digits` digits after the point."""
    raw = _real_raw(x)
    if raw == libmp.fzero:
        return '0.' + '0' * digits + 'e+0'
    return libmp.to_str(raw, digits + 1, strip_zeros=False, min_fixed=0, max_fixed=0,
                        show_zero_exponent=True)


def format_fixed(x, decimals: int, truncate: bool = False) -> str:
    """Fixed-point with exactly `decimals` places; rounds half-even, or chops toward zero with `truncate`."""
    q = exact_real(_RawReal(_real_raw(x)))
    scaled = q * 10 ** decimals
    if truncate:
        guard = 10 ** TRUNCATE_GUARD_DIGITS
        n = math.trunc(Fraction(round(scaled * guard), guard))
    else:
        n = round(scaled)
    if decimals == 0:
        return str(n)
    return format_fixed_exact(n, decimals)


def format_decimal(x, digits: int) -> str:
    """Shortest-form decimal with up to `digits` significant digits (round-trips)."""
    return libmp.to_str(_real_raw(x), digits)


def format_complex_fixed(z, decimals: int, truncate: bool = False) -> str:
    """"1.000000380419496 + 0.000000816235730i" style listing."""
    re = format_fixed(z.real, decimals, truncate)
    im = format_fixed(z.imag, decimals, truncate)
    if im.startswith('-'):
        return f"{re} - {im[1:]}i"
    return f"{re} + {im}i"


def _real_raw(x):
    raw = getattr(x, '_mpf_', None)
    if raw is None:
        raise ParseError(f"expected an mpmath real, got {type(x).__name__}")
    return raw


def format_exact(q: Fraction) -> str:
    """Exact decimal literal for q; "p/q" when q has no terminating expansion."""
    q = exact_real(q)
    den = q.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{q.numerator}/{q.denominator}"
    places = max(twos, fives)
    if places == 0:
        return str(q.numerator)
    scaled = q * 10 ** places
    return format_fixed_exact(int(scaled), places)


def format_fixed_exact(n: int, places: int) -> str:
    sign = '-' if n < 0 else ''
    whole, frac = divmod(abs(n), 10 ** places)
    return f"{sign}{whole}.{frac:0{places}d}"
