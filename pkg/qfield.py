"""
Exact scalars in Q(q) and the q-combinatorics used by the defining relations.

q is a formal parameter and is never specialised inside the engine.  RatQ is
the element type of sympy's ``QQ.frac_field(q)``: sympy cancels every
fraction on construction, so numerator and denominator are coprime and the
representation is canonical.  LaurentQ is a thin wrapper over ``QQ[q]`` with
an exponent shift, used for q-integers and q-binomials.
"""
import logging

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sympy import QQ, Symbol
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.fields import FracElement
from sympy.polys.rings import PolyElement

from exceptions import DatumFormatError, QArithmeticError


logger = logging.getLogger(__name__)

q_symbol = Symbol('q')
QF = QQ.frac_field(q_symbol)
FIELD = QF.field
RING = FIELD.ring

RatQ = FracElement

q = FIELD.gens[0]
ONE = FIELD.one
ZERO = FIELD.zero

_TRANSFORMS = standard_transformations + (convert_xor,)


@lru_cache(maxsize=None)
def qpow(n: int) -> RatQ:
    """q**n for any integer n."""
    return q ** n


def ratq(value) -> RatQ:
    """Coerce an int, Fraction, LaurentQ or RatQ into Q(q)."""
    if isinstance(value, FracElement):
        return value
    if isinstance(value, LaurentQ):
        return value.to_ratq()
    if isinstance(value, Fraction):
        return FIELD(QQ(value.numerator, value.denominator))
    return FIELD(QQ(value))


def ratq_inv(x: RatQ) -> RatQ:
    if not x:
        raise QArithmeticError('Division by zero in Q(q)')
    return ONE / x


def ratq_div(x: RatQ, y: RatQ) -> RatQ:
    return x * ratq_inv(y)


def _to_fraction(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


def evaluate(x: RatQ, q0: Fraction) -> Fraction:
    """Exact value of x at the rational point q = q0."""
    point = QQ(q0.numerator, q0.denominator)
    den = x.denom(point)
    if not den:
        raise QArithmeticError(f'Denominator of {format_ratq(x)} vanishes at q = {q0}')
    return _to_fraction(x.numer(point)) / _to_fraction(den)


def format_ratq(x: RatQ) -> str:
    return str(QF.to_sympy(x))


def parse_ratq(text: str) -> RatQ:
    try:
        expr = parse_expr(text, local_dict={'q': q_symbol}, transformations=_TRANSFORMS)
    except Exception as e:
        raise DatumFormatError(f'Cannot parse scalar {text!r}: {e}') from e
    extra = expr.free_symbols - {q_symbol}
    if extra:
        raise DatumFormatError(f'Scalar {text!r} uses symbols other than q: {sorted(map(str, extra))}')
    try:
        return QF.from_sympy(expr)
    except Exception as e:
        raise DatumFormatError(f'Scalar {text!r} is not a rational function of q: {e}') from e


@dataclass(frozen=True)
class LaurentQ:
    """Laurent polynomial q**low * poly(q) with poly(0) != 0.

    The zero element has low == 0 and poly == 0.
    """
    low: int
    poly: PolyElement

    @classmethod
    def normalized(cls, low: int, poly: PolyElement) -> 'LaurentQ':
        if not poly:
            return cls(0, RING.zero)
        shift = min(monom[0] for monom in poly.keys())
        if shift:
            poly = RING.from_dict({(monom[0] - shift,): coeff for monom, coeff in poly.items()})
        return cls(low + shift, poly)

    @classmethod
    def from_terms(cls, terms: dict[int, Fraction | int]) -> 'LaurentQ':
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls.zero()
        low = min(terms)
        poly = RING.from_dict({(e - low,): QQ(Fraction(c).numerator, Fraction(c).denominator)
                               for e, c in terms.items()})
        return cls(low, poly)

    @classmethod
    def zero(cls) -> 'LaurentQ':
        return cls(0, RING.zero)

    @classmethod
    def one(cls) -> 'LaurentQ':
        return cls(0, RING.one)

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> 'LaurentQ':
        return cls.from_terms({exponent: coeff})

    @property
    def terms(self) -> dict[int, Fraction]:
        return {self.low + monom[0]: _to_fraction(coeff) for monom, coeff in self.poly.items()}

    def __bool__(self) -> bool:
        return bool(self.poly)

    def _shifted(self, low: int) -> PolyElement:
        return self.poly * RING.gens[0] ** (self.low - low)

    def __add__(self, other: 'LaurentQ') -> 'LaurentQ':
        if not other:
            return self
        if not self:
            return other
        low = min(self.low, other.low)
        return LaurentQ.normalized(low, self._shifted(low) + other._shifted(low))

    def __neg__(self) -> 'LaurentQ':
        return LaurentQ(self.low, -self.poly)

    def __sub__(self, other: 'LaurentQ') -> 'LaurentQ':
        return self + (-other)

    def __mul__(self, other: 'LaurentQ') -> 'LaurentQ':
        if not self or not other:
            return LaurentQ.zero()
        return LaurentQ.normalized(self.low + other.low, self.poly * other.poly)

    def to_ratq(self) -> RatQ:
        return FIELD.field_new(self.poly) * qpow(self.low)

    def evaluate(self, q0: Fraction) -> Fraction:
        return sum((c * q0 ** e for e, c in self.terms.items()), Fraction(0))

    def __str__(self) -> str:
        return format_ratq(self.to_ratq())


def q_int(a: int, c: int = 1) -> LaurentQ:
    """Symmetric q_i-integer [a] with q_i = q**c."""
    if a == 0:
        return LaurentQ.zero()
    n = abs(a)
    sign = 1 if a > 0 else -1
    return LaurentQ.from_terms({c * (n - 1 - 2 * k): sign for k in range(n)})


@lru_cache(maxsize=None)
def q_binom(n: int, k: int, c: int = 1) -> LaurentQ:
    """Gaussian binomial in q_i = q**c, via the q-Pascal rule."""
    if k < 0 or k > n:
        return LaurentQ.zero()
    if k == 0 or k == n:
        return LaurentQ.one()
    return (LaurentQ.monomial(c * k) * q_binom(n - 1, k, c)
            + LaurentQ.monomial(c * (k - n)) * q_binom(n - 1, k - 1, c))


def q_factorial(n: int, c: int = 1) -> LaurentQ:
    result = LaurentQ.one()
    for k in range(1, n + 1):
        result = result * q_int(k, c)
    return result


def qi_bracket(c: int) -> RatQ:
    """(q_i - q_i**-1)**-1, the scalar of the E-F commutator."""
    return ratq_inv(qpow(c) - qpow(-c))


def ratq_from_laurent(x: LaurentQ) -> RatQ:
    return x.to_ratq()
