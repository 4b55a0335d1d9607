"""
The split projection of H = U_q^<=0(T) onto its chi_D-degree-0 part and the
braided Hopf algebra structure it induces on the coinvariants

    B = { b in H : b(1) (x) pi(b(2)) = b (x) 1 }.

pi keeps the terms whose letters all lie in iota(J).  Everything else is the
standard Radford-Majid calculus:

    Pi(h)          = h(1) S(pi(h(2)))
    Upsilon(h)     = Pi(h(1)) (x) pi(h(2))            inverse: b (x) h -> b h
    Delta_(b)      = Pi(b(1)) (x) b(2)
    S_(b)          = pi(b(1)) S(b(2))
    Psi(b (x) c)   = (pi(b(1)) |> c) (x) b(2)

with |> the left adjoint action.  All maps are linear, so they are applied
term by term on normal forms.
"""
import logging

from exceptions import InputError
from linalg import axpy
from qfield import ONE, RatQ
from rootdata import SubRootDatum
from uqalgebra import QuantumGroup, Tensor, Term, UElement
from uqalgebra.elements import TermVector, Word


logger = logging.getLogger(__name__)


class Projection:
    """pi, Pi and Upsilon for a sub-root datum, plus the induced braided maps."""

    def __init__(self, s: SubRootDatum, algebra: QuantumGroup):
        self.s = s
        self.algebra = algebra
        self.inner = frozenset(s.iota)
        self._projected: dict[Word, TermVector] = {}

    def _unit(self, term: Term) -> UElement:
        return UElement(self.algebra, {term: ONE})

    def _require_borel(self, x: UElement, what: str) -> None:
        if x.has_e_part():
            raise InputError(f'{what} is defined on U_q^<=0 only; got a term with E letters')

    def in_degree_zero(self, term: Term) -> bool:
        f, _, e = term
        return all(letter in self.inner for letter in f) and all(letter in self.inner for letter in e)

    def pi0(self, x: UElement) -> UElement:
        return UElement(self.algebra, {t: c for t, c in x.terms.items() if self.in_degree_zero(t)})

    def _pi_word(self, f: Word) -> TermVector:
        """Pi(F_f K_mu) = Pi(F_f), since K_mu is grouplike of degree 0."""
        cached = self._projected.get(f)
        if cached is not None:
            return cached
        algebra = self.algebra
        result: TermVector = {}
        for (left, right), c in algebra.coproduct_terms((f, algebra.zero_mu, ()), right=self.inner).items():
            antipode = UElement(algebra, algebra.antipode_term(right))
            axpy(result, c, algebra.multiply(self._unit(left), antipode).terms)
        self._projected[f] = result
        return result

    def Pi(self, h: UElement) -> UElement:
        self._require_borel(h, 'Pi')
        result: TermVector = {}
        for (f, _, _), c in h.terms.items():
            axpy(result, c, self._pi_word(f))
        return UElement(self.algebra, result)

    def is_coinvariant(self, x: UElement) -> bool:
        image = self.algebra.coproduct(x, right=self.inner)
        return image == Tensor.of(x, self.algebra.one())

    def upsilon(self, h: UElement) -> Tensor:
        self._require_borel(h, 'Upsilon')
        result: dict[tuple[Term, Term], RatQ] = {}
        for (left, right), c in self.algebra.coproduct(h, right=self.inner).terms.items():
            for b, d in self._pi_word(left[0]).items():
                axpy(result, c * d, {(b, right): ONE})
        return Tensor(self.algebra, result, 2)

    def upsilon_inverse(self, t: Tensor) -> UElement:
        return t.contract(lambda key: self.algebra.multiply_terms(key[0], key[1]))

    def act(self, h: UElement, c: UElement) -> UElement:
        """Left adjoint action h |> c = h(1) c S(h(2))."""
        return self.algebra.adjoint(h, c)

    def bosonisation_product(self, x: Tensor, y: Tensor) -> Tensor:
        """(b (x) h)(c (x) g) = b (h(1) |> c) (x) h(2) g on B (x) H_0."""
        algebra = self.algebra
        result: dict[tuple[Term, Term], RatQ] = {}
        for (b, h), c1 in x.terms.items():
            for (c, g), c2 in y.terms.items():
                for (h1, h2), c3 in algebra.coproduct_terms(h).items():
                    left = algebra.multiply(self._unit(b), self.act(self._unit(h1), self._unit(c)))
                    right = algebra.multiply_terms(h2, g)
                    for lt, d1 in left.terms.items():
                        for rt, d2 in right.items():
                            axpy(result, c1 * c2 * c3 * d1 * d2, {(lt, rt): ONE})
        return Tensor(algebra, result, 2)

    # braided structure on B

    def braided_coproduct(self, b: UElement) -> Tensor:
        self._require_borel(b, 'braided coproduct')
        result: dict[tuple[Term, Term], RatQ] = {}
        for (left, right), c in self.algebra.coproduct(b).terms.items():
            for t, d in self._pi_word(left[0]).items():
                axpy(result, c * d, {(t, right): ONE})
        return Tensor(self.algebra, result, 2)

    def braided_antipode(self, b: UElement) -> UElement:
        self._require_borel(b, 'braided antipode')
        algebra = self.algebra
        result: TermVector = {}
        for (left, right), c in algebra.coproduct(b, left=self.inner).terms.items():
            product = algebra.multiply(self._unit(left), UElement(algebra, algebra.antipode_term(right)))
            axpy(result, c, product.terms)
        return UElement(algebra, result)

    def braided_counit(self, b: UElement) -> RatQ:
        return self.algebra.counit(b)

    def braid(self, b: UElement, c: UElement) -> Tensor:
        """Psi(b (x) c) = (pi(b(1)) |> c) (x) b(2)."""
        algebra = self.algebra
        result: dict[tuple[Term, Term], RatQ] = {}
        for (left, right), coeff in algebra.coproduct(b, left=self.inner).terms.items():
            for t, d in self.act(self._unit(left), c).terms.items():
                axpy(result, coeff * d, {(t, right): ONE})
        return Tensor(algebra, result, 2)

    def braid_tensor(self, x: Tensor) -> Tensor:
        """Psi extended linearly to a 2-fold tensor."""
        result: dict[tuple[Term, Term], RatQ] = {}
        for (b, c), coeff in x.terms.items():
            axpy(result, coeff, self.braid(self._unit(b), self._unit(c)).terms)
        return Tensor(self.algebra, result, 2)

    def braided_tensor_product(self, x: Tensor, y: Tensor) -> Tensor:
        """(b (x) b')(c (x) c') = b Psi(b' (x) c) c' in the braided tensor product."""
        algebra = self.algebra
        result: dict[tuple[Term, Term], RatQ] = {}
        for (b, b2), c1 in x.terms.items():
            for (c, c2), d1 in y.terms.items():
                for (u, v), d2 in self.braid(self._unit(b2), self._unit(c)).terms.items():
                    left = algebra.multiply_terms(b, u)
                    right = algebra.multiply_terms(v, c2)
                    for lt, e1 in left.items():
                        for rt, e2 in right.items():
                            axpy(result, c1 * d1 * d2 * e1 * e2, {(lt, rt): ONE})
        return Tensor(algebra, result, 2)
