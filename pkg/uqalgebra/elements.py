"""
Element types of U_q: linear combinations of normal terms F_a K_mu E_b.

A term is the triple (a, mu, b) of a normal F-word, a K-exponent over I and a
normal E-word.  UElement and Tensor only hold reduced, nonzero coefficients;
all reductions go through the owning QuantumGroup.
"""
from collections.abc import Callable, Iterable
from typing import TYPE_CHECKING

from linalg import axpy
from qfield import ONE, RatQ, ratq

if TYPE_CHECKING:
    from uqalgebra.quantumgroup import QuantumGroup

Word = tuple[int, ...]
Mu = tuple[int, ...]
Term = tuple[Word, Mu, Word]
TermVector = dict[Term, RatQ]


def _coerce(value) -> RatQ:
    return ratq(value)


class UElement:
    __slots__ = ('algebra', 'terms')

    def __init__(self, algebra: 'QuantumGroup', terms: TermVector):
        self.algebra = algebra
        self.terms = {t: c for t, c in terms.items() if c}

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _combine(self, other: 'UElement', sign: int) -> 'UElement':
        if other.algebra is not self.algebra:
            raise ValueError('Elements of different algebras')
        result = dict(self.terms)
        axpy(result, ratq(sign), other.terms)
        return UElement(self.algebra, result)

    def __add__(self, other):
        if not isinstance(other, UElement):
            other = self.algebra.scalar(other)
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, UElement):
            other = self.algebra.scalar(other)
        return self._combine(other, -1)

    def __neg__(self) -> 'UElement':
        return UElement(self.algebra, {t: -c for t, c in self.terms.items()})

    def scale(self, coeff) -> 'UElement':
        coeff = _coerce(coeff)
        if not coeff:
            return UElement(self.algebra, {})
        return UElement(self.algebra, {t: coeff * c for t, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, UElement):
            return self.algebra.multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UElement):
            if other == 0:
                return self.is_zero()
            return NotImplemented
        return other.algebra is self.algebra and (self - other).is_zero()

    __hash__ = None

    def coefficient(self, term: Term) -> RatQ:
        return self.terms.get(term, ratq(0))

    def support(self) -> list[Term]:
        return sorted(self.terms)

    def f_degrees(self) -> set[tuple[int, ...]]:
        half = self.algebra.half
        return {half.degree_of(f) for f, _, _ in self.terms}

    def has_e_part(self) -> bool:
        return any(e for _, _, e in self.terms)

    def __repr__(self) -> str:
        from uqalgebra.expressions import format_element
        return f'UElement({format_element(self)})'


class Tensor:
    """Sum of tensor products of normal terms, of a fixed arity."""

    __slots__ = ('algebra', 'terms', 'arity')

    def __init__(self, algebra: 'QuantumGroup', terms: dict[tuple[Term, ...], RatQ], arity: int = 2):
        self.algebra = algebra
        self.arity = arity
        self.terms = {k: c for k, c in terms.items() if c}

    @classmethod
    def of(cls, *elements: UElement) -> 'Tensor':
        algebra = elements[0].algebra
        terms = {(): ONE}
        for element in elements:
            terms = {key + (t,): c * d for key, c in terms.items() for t, d in element.terms.items()}
        return cls(algebra, terms, len(elements))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: 'Tensor') -> 'Tensor':
        result = dict(self.terms)
        axpy(result, ONE, other.terms)
        return Tensor(self.algebra, result, self.arity)

    def __sub__(self, other: 'Tensor') -> 'Tensor':
        result = dict(self.terms)
        axpy(result, -ONE, other.terms)
        return Tensor(self.algebra, result, self.arity)

    def scale(self, coeff) -> 'Tensor':
        coeff = _coerce(coeff)
        return Tensor(self.algebra, {k: coeff * c for k, c in self.terms.items()}, self.arity)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.arity == other.arity and (self - other).is_zero()

    __hash__ = None

    def __mul__(self, other: 'Tensor') -> 'Tensor':
        """Legwise product (a x b)(c x d) = ac x bd."""
        if other.arity != self.arity:
            raise ValueError('Tensor arities differ')
        algebra = self.algebra
        result: dict[tuple[Term, ...], RatQ] = {}
        for left, c in self.terms.items():
            for right, d in other.terms.items():
                partial = {(): c * d}
                for a, b in zip(left, right):
                    product = algebra.multiply_terms(a, b)
                    partial = {key + (t,): x * y for key, x in partial.items() for t, y in product.items()}
                axpy(result, ONE, partial)
        return Tensor(algebra, result, self.arity)

    def map_leg(self, position: int, fn: Callable[[Term], dict[tuple[Term, ...], RatQ]],
                width: int = 1) -> 'Tensor':
        """Replace leg ``position`` by ``width`` legs using a linear map defined on terms."""
        result: dict[tuple[Term, ...], RatQ] = {}
        for key, c in self.terms.items():
            for replacement, d in fn(key[position]).items():
                new_key = key[:position] + replacement + key[position + 1:]
                axpy(result, c, {new_key: d})
        return Tensor(self.algebra, result, self.arity - 1 + width)

    def map_each(self, *fns: Callable[[Term], TermVector]) -> 'Tensor':
        """Apply one linear map per leg."""
        result: dict[tuple[Term, ...], RatQ] = {}
        for key, c in self.terms.items():
            partial = {(): c}
            for leg, fn in zip(key, fns):
                image = fn(leg)
                partial = {k + (t,): x * y for k, x in partial.items() for t, y in image.items()}
                if not partial:
                    break
            axpy(result, ONE, partial)
        return Tensor(self.algebra, result, self.arity)

    def contract(self, fn: Callable[[tuple[Term, ...]], TermVector]) -> UElement:
        """Collapse every key to an element, e.g. multiplication of the legs."""
        result: TermVector = {}
        for key, c in self.terms.items():
            axpy(result, c, fn(key))
        return UElement(self.algebra, result)

    def pairs(self) -> list[tuple[UElement, UElement]]:
        """Sweedler list sum x(1) (x) x(2), grouped by the left leg."""
        if self.arity != 2:
            raise ValueError('pairs() needs a 2-fold tensor')
        grouped: dict[Term, TermVector] = {}
        for (left, right), c in sorted(self.terms.items()):
            grouped.setdefault(left, {})[right] = c
        return [(UElement(self.algebra, {left: ONE}), UElement(self.algebra, rights))
                for left, rights in grouped.items()]

    def legs(self, position: int) -> Iterable[Term]:
        return {key[position] for key in self.terms}
