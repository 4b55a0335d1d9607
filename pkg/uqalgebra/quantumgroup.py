"""
U_q of a root datum: normal-form multiplication, Hopf structure, adjoint
action, weights and the pairing of the Borel part.

Relations, with q_i = q^{c_i}, H_i = K_{c_i e_i} and i.j the symmetric form:

    K_mu E_i = q^{<mu, i2(i)>} E_i K_mu        K_mu F_i = q^{-<mu, i2(i)>} F_i K_mu
    E_i F_w - F_w E_i = (r_i(w) H_i - rbar_i(w) H_i^-1) / (q_i - q_i^-1)

    Delta F_i = F_i (x) H_i^-1 + 1 (x) F_i     S F_i = -F_i H_i
    Delta E_i = E_i (x) 1 + H_i (x) E_i        S E_i = -H_i^-1 E_i
    Delta K = K (x) K                          S K_mu = K_-mu

The pairing of the Borel part uses <xy, z> = <x, z(2)> <y, z(1)> and
<x, yz> = <x(2), y> <x(1), z>; on normal terms this gives
<F_a K_mu, F_b K_nu> = P(a, b) q^{mu^T C nu}.
"""
import itertools
import logging

from dataclasses import dataclass

from exceptions import DegreeBoundError, InputError
from linalg import axpy
from qfield import ONE, ZERO, RatQ, qi_bracket, qpow, ratq
from rootdata import RootDatum, SubRootDatum
from uqalgebra.elements import Mu, Tensor, Term, TermVector, UElement, Word
from uqalgebra.halves import HalfAlgebra


logger = logging.getLogger(__name__)


def _add(mu: Mu, nu: Mu, sign: int = 1) -> Mu:
    return tuple(a + sign * b for a, b in zip(mu, nu))


class QuantumGroup:
    """U_q(T) with exact normal forms.

    ``grading`` is the set of indices whose letters count towards the degree
    bound (the deleted nodes D of a sub-root datum); by default every index
    counts.
    """

    def __init__(self, datum: RootDatum, grading=None, max_degree: int = 6):
        if not datum.y_regular():
            raise InputError(f'{datum.label()} is not Y-regular; K_mu with mu in Z[I] would not be faithful')
        self.datum = datum
        self.n = datum.n
        self.half = HalfAlgebra(datum)
        self.grading = frozenset(range(self.n)) if grading is None else frozenset(grading)
        self.max_degree = max_degree
        self.zero_mu: Mu = (0,) * self.n
        self._products: dict[tuple[Term, Term], TermVector] = {}
        self._coproducts: dict[tuple, dict[tuple[Term, Term], RatQ]] = {}
        self._antipodes: dict[Term, TermVector] = {}
        self._pairings: dict[tuple[Word, Word], RatQ] = {}

    # construction

    def element(self, terms: dict[Term, RatQ]) -> UElement:
        """Element from arbitrary (not necessarily normal) words."""
        return UElement(self, self.normalize(terms))

    def normalize(self, terms: dict[Term, RatQ]) -> TermVector:
        result: TermVector = {}
        for (f, mu, e), c in terms.items():
            if not c:
                continue
            fs = self.half.reduce_word(f)
            es = self.half.reduce_word(e) if e else {(): ONE}
            for f2, c1 in fs.items():
                for e2, c2 in es.items():
                    axpy(result, c * c1 * c2, {(f2, tuple(mu), e2): ONE})
        return result

    def monomial(self, f: Word = (), mu: Mu | None = None, e: Word = (), coeff=1) -> UElement:
        return self.element({(tuple(f), tuple(mu) if mu is not None else self.zero_mu, tuple(e)): ratq(coeff)})

    def scalar(self, value) -> UElement:
        return UElement(self, {((), self.zero_mu, ()): ratq(value)})

    def one(self) -> UElement:
        return self.scalar(1)

    def zero(self) -> UElement:
        return UElement(self, {})

    def E(self, i: int) -> UElement:
        return UElement(self, {((), self.zero_mu, (i,)): ONE})

    def F(self, i: int) -> UElement:
        return UElement(self, {((i,), self.zero_mu, ()): ONE})

    def K(self, mu) -> UElement:
        return UElement(self, {((), tuple(mu), ()): ONE})

    def h_mu(self, beta) -> Mu:
        """K-exponent of H_beta = prod H_i^{beta_i}."""
        return tuple(self.datum.c(i) * b for i, b in enumerate(beta))

    def H(self, i: int, power: int = 1) -> UElement:
        return self.K(tuple(self.datum.c(i) * power if k == i else 0 for k in range(self.n)))

    def unit_mu(self, i: int, power: int = 1) -> Mu:
        return tuple(power if k == i else 0 for k in range(self.n))

    # grading

    def degree(self, term: Term) -> int:
        f, _, e = term
        return sum(1 for letter in f if letter in self.grading) + sum(1 for letter in e if letter in self.grading)

    def check_degree(self, degree: int, what: str) -> None:
        if degree > self.max_degree:
            raise DegreeBoundError(degree, self.max_degree, what)

    # multiplication

    def multiply(self, x: UElement, y: UElement) -> UElement:
        result: TermVector = {}
        for t1, c1 in x.terms.items():
            for t2, c2 in y.terms.items():
                self.check_degree(self.degree(t1) + self.degree(t2), 'product')
                axpy(result, c1 * c2, self.multiply_terms(t1, t2))
        return UElement(self, result)

    def multiply_terms(self, t1: Term, t2: Term) -> TermVector:
        key = (t1, t2)
        cached = self._products.get(key)
        if cached is not None:
            return cached
        f1, mu1, e1 = t1
        f2, mu2, e2 = t2
        result: TermVector = {}
        if not e1:
            coeff = qpow(-self.datum.bilinear(mu1, self.half.degree_of(f2)))
            mu = _add(mu1, mu2)
            for f, c in self.half.reduce_word(f1 + f2).items():
                result[(f, mu, e2)] = coeff * c
        else:
            head = (f1, mu1, e1[:-1])
            for t, c in self._e_times(e1[-1], t2).items():
                axpy(result, c, self.multiply_terms(head, t))
        self._products[key] = result
        return result

    def _e_times(self, i: int, term: Term) -> TermVector:
        """E_i * F_f K_mu E_e in normal form."""
        f, mu, e = term
        result: TermVector = {}
        coeff = qpow(-self.datum.k_exponent(mu, i))
        for e2, c in self.half.reduce_word((i,) + e).items():
            result[(f, mu, e2)] = coeff * c
        if i in f:
            bracket = qi_bracket(self.datum.c(i))
            h = self.h_mu(self.unit_mu(i))
            for w, c in self.half.r(i, {f: ONE}).items():
                axpy(result, bracket * c, {(w, _add(mu, h), e): ONE})
            for w, c in self.half.rbar(i, {f: ONE}).items():
                axpy(result, -bracket * c, {(w, _add(mu, h, -1), e): ONE})
        return result

    def commutator(self, x: UElement, y: UElement) -> UElement:
        return self.multiply(x, y) - self.multiply(y, x)

    def power(self, x: UElement, k: int) -> UElement:
        result = self.one()
        for _ in range(k):
            result = self.multiply(result, x)
        return result

    # Hopf structure

    def _weight_of(self, word: Word) -> tuple[int, ...]:
        return self.half.degree_of(word)

    @staticmethod
    def _masks(word: Word, left: frozenset | None, right: frozenset | None):
        """Left/right splittings of word, skipping letters a leg may not carry."""
        choices = []
        for letter in word:
            options = []
            if left is None or letter in left:
                options.append(True)
            if right is None or letter in right:
                options.append(False)
            choices.append(options)
        return itertools.product(*choices)

    def _coproduct_term(self, term: Term, left: frozenset | None = None,
                        right: frozenset | None = None) -> dict[tuple[Term, Term], RatQ]:
        """Delta of a normal term, keeping only the summands whose legs use allowed letters.

        Reduction preserves multidegree, so filtering before normalisation
        equals projecting afterwards.
        """
        key = (term, left, right)
        cached = self._coproducts.get(key)
        if cached is not None:
            return cached
        f, mu, e = term
        dot = self.datum.dot
        raw: dict[tuple[Term, Term], RatQ] = {}
        for mask_f in self._masks(f, left, right):
            exp_f = sum(dot[f[k]][f[l]] for k in range(len(f)) for l in range(k + 1, len(f))
                        if mask_f[k] and not mask_f[l])
            f_left = tuple(x for x, m in zip(f, mask_f) if m)
            f_right = tuple(x for x, m in zip(f, mask_f) if not m)
            shift_right = self.h_mu(self._weight_of(f_left))
            for mask_e in self._masks(e, left, right):
                exp_e = sum(dot[e[k]][e[l]] for k in range(len(e)) for l in range(k + 1, len(e))
                            if mask_e[k] and not mask_e[l])
                e_left = tuple(x for x, m in zip(e, mask_e) if m)
                e_right = tuple(x for x, m in zip(e, mask_e) if not m)
                shift_left = self.h_mu(self._weight_of(e_right))
                head = (f_left, _add(mu, shift_left), e_left)
                tail = (f_right, _add(mu, shift_right, -1), e_right)
                axpy(raw, qpow(exp_f - exp_e), {(head, tail): ONE})
        result: dict[tuple[Term, Term], RatQ] = {}
        for (head, tail), c in raw.items():
            for l2, c1 in self.normalize({head: ONE}).items():
                for r2, c2 in self.normalize({tail: ONE}).items():
                    axpy(result, c * c1 * c2, {(l2, r2): ONE})
        self._coproducts[key] = result
        return result

    def coproduct(self, x: UElement, left: frozenset | None = None, right: frozenset | None = None) -> Tensor:
        """Delta x; ``left``/``right`` restrict the letters of the corresponding leg."""
        result: dict[tuple[Term, Term], RatQ] = {}
        for term, c in x.terms.items():
            self.check_degree(self.degree(term), 'coproduct argument')
            axpy(result, c, self._coproduct_term(term, left, right))
        return Tensor(self, result, 2)

    def coproduct_terms(self, term: Term, left: frozenset | None = None,
                        right: frozenset | None = None) -> dict[tuple[Term, ...], RatQ]:
        return self._coproduct_term(term, left, right)

    def counit(self, x: UElement) -> RatQ:
        total = ZERO
        for (f, _, e), c in x.terms.items():
            if not f and not e:
                total += c
        return total

    def counit_term(self, term: Term) -> RatQ:
        f, _, e = term
        return ONE if not f and not e else ZERO

    def _antipode_term(self, term: Term) -> TermVector:
        cached = self._antipodes.get(term)
        if cached is not None:
            return cached
        f, mu, e = term
        dot = self.datum.dot
        exp_f = -sum(dot[f[l]][f[k]] for k in range(len(f)) for l in range(k))
        exp_e = sum(dot[e[l]][e[k]] for k in range(len(e)) for l in range(k))
        s_f = self.element({(tuple(reversed(f)), self.h_mu(self._weight_of(f)), ()):
                            qpow(exp_f) * (-1) ** len(f)})
        s_e = self.element({((), _add(self.zero_mu, self.h_mu(self._weight_of(e)), -1), tuple(reversed(e))):
                            qpow(exp_e) * (-1) ** len(e)})
        s_k = self.K(_add(self.zero_mu, mu, -1))
        result = self.multiply(self.multiply(s_e, s_k), s_f).terms
        self._antipodes[term] = result
        return result

    def antipode(self, x: UElement) -> UElement:
        result: TermVector = {}
        for term, c in x.terms.items():
            self.check_degree(self.degree(term), 'antipode argument')
            axpy(result, c, self._antipode_term(term))
        return UElement(self, result)

    def antipode_term(self, term: Term) -> TermVector:
        return self._antipode_term(term)

    # adjoint action

    def adjoint(self, u: UElement, v: UElement) -> UElement:
        """Ad_u(v) = u(1) v S(u(2))."""
        result: TermVector = {}
        for (a, b), c in self.coproduct(u).terms.items():
            left = self.multiply(UElement(self, {a: ONE}), v)
            right = UElement(self, self._antipode_term(b))
            axpy(result, c, self.multiply(left, right).terms)
        return UElement(self, result)

    def ad_F(self, j: int, v: UElement) -> UElement:
        """Ad_{F_j}(v) = (F_j v - v F_j) H_j."""
        return self.multiply(self.commutator(self.F(j), v), self.H(j))

    def ad_E(self, j: int, v: UElement) -> UElement:
        """Ad_{E_j}(v) = E_j v - H_j v H_j^-1 E_j."""
        conj = self.multiply(self.multiply(self.H(j), v), self.H(j, -1))
        return self.multiply(self.E(j), v) - self.multiply(conj, self.E(j))

    def ad_K(self, mu, v: UElement) -> UElement:
        result: TermVector = {}
        for (f, nu, e), c in v.terms.items():
            exponent = self.datum.bilinear(mu, self._weight_of(e)) - self.datum.bilinear(mu, self._weight_of(f))
            result[(f, nu, e)] = c * qpow(exponent)
        return UElement(self, result)

    # weights

    def term_weight(self, term: Term) -> tuple[int, ...]:
        f, _, e = term
        return _add(self.datum.wt2(self._weight_of(e)), self.datum.wt2(self._weight_of(f)), -1)

    def weight(self, x: UElement) -> tuple[int, ...] | None:
        """Common weight in X of all terms; None when the terms disagree."""
        weights = {self.term_weight(t) for t in x.terms}
        if not weights:
            return (0,) * self.datum.rank_x
        if len(weights) > 1:
            return None
        return weights.pop()

    def borel_basis(self, n: int, max_length: int, weight=None, k_box: int = 0) -> list[Term]:
        """Normal terms F_a K_mu of grading degree n with len(a) <= max_length."""
        self.check_degree(n, 'Borel slice')
        terms = []
        boxes = list(itertools.product(range(-k_box, k_box + 1), repeat=self.n))
        for length in range(max_length + 1):
            for beta in compositions(length, self.n):
                if sum(beta[d] for d in self.grading) != n:
                    continue
                if weight is not None and self.datum.wt2(tuple(-b for b in beta)) != tuple(weight):
                    continue
                for word in self.half.basis(beta):
                    terms.extend((word, tuple(mu), ()) for mu in boxes)
        return terms

    # pairing of the Borel part

    def _word_pairing(self, a: Word, b: Word) -> RatQ:
        key = (a, b)
        cached = self._pairings.get(key)
        if cached is not None:
            return cached
        if not a or not b:
            value = ONE if not a and not b else ZERO
        elif self.half.degree_of(a) != self.half.degree_of(b):
            value = ZERO
        else:
            first, rest = a[0], a[1:]
            value = ZERO
            for p, letter in enumerate(b):
                if letter == first:
                    exponent = self.half.pair_degree(first, self.half.degree_of(b[:p]))
                    value += qpow(exponent) * self._word_pairing(rest, b[:p] + b[p + 1:])
            value = value * self.f_pairing_constant(first)
        self._pairings[key] = value
        return value

    def f_pairing_constant(self, i: int) -> RatQ:
        """<F_i, F_i> = -(q_i - q_i^-1)^-1."""
        return -qi_bracket(self.datum.c(i))

    def pairing(self, x: UElement, y: UElement) -> RatQ:
        total = ZERO
        for (a, mu, e1), c in x.terms.items():
            if e1:
                raise InputError('pairing is defined on the Borel part U^<=0 only')
            for (b, nu, e2), d in y.terms.items():
                if e2:
                    raise InputError('pairing is defined on the Borel part U^<=0 only')
                value = self._word_pairing(a, b)
                if value:
                    total += c * d * value * qpow(self.datum.bilinear(mu, nu))
        return total

    # relations

    def serre_relation(self, i: int, j: int, side: str = 'F') -> UElement:
        """The q-Serre element for (i, j), reduced; zero in a sound engine."""
        words = self.half.serre_element(i, j)
        if side == 'F':
            return self.element({(w, self.zero_mu, ()): c for w, c in words.items()})
        if side == 'E':
            return self.element({((), self.zero_mu, w): c for w, c in words.items()})
        raise ValueError(f'side must be F or E, got {side!r}')


def compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


@dataclass(frozen=True)
class RelationCheck:
    name: str
    passed: bool
    residual: str = ''


class SubAlgebraEmbedding:
    """The injective Hopf map U_q(J) -> U_q(T) of a sub-root datum."""

    def __init__(self, s: SubRootDatum, source: QuantumGroup, target: QuantumGroup):
        self.s = s
        self.source = source
        self.target = target

    def map_mu(self, mu) -> Mu:
        image = [0] * self.target.n
        for j, v in enumerate(mu):
            image[self.s.iota[j]] += v
        return tuple(image)

    def map_word(self, word: Word) -> Word:
        return tuple(self.s.iota[letter] for letter in word)

    def map_term(self, term: Term) -> Term:
        f, mu, e = term
        return self.map_word(f), self.map_mu(mu), self.map_word(e)

    def __call__(self, x: UElement) -> UElement:
        return self.target.element({self.map_term(t): c for t, c in x.terms.items()})

    def check_relations(self) -> list[RelationCheck]:
        """Map every defining relation of U_q(J) into U_q(T) and reduce it."""
        src, tgt = self.source, self.target
        j_datum = src.datum
        checks = []

        def record(name: str, residual: UElement) -> None:
            from uqalgebra.expressions import format_element
            checks.append(RelationCheck(name, residual.is_zero(),
                                        '' if residual.is_zero() else format_element(residual)))

        for a in range(j_datum.n):
            ka, kb = self.map_mu(src.unit_mu(a)), self.map_mu(src.unit_mu(a, -1))
            for b in range(j_datum.n):
                ib = self.s.iota[b]
                scale = qpow(j_datum.cartan[a][b])
                lhs = tgt.multiply(tgt.multiply(tgt.K(ka), tgt.E(ib)), tgt.K(kb))
                record(f'K{j_datum.names[a]} E{j_datum.names[b]}', lhs - tgt.E(ib).scale(scale))
                lhs = tgt.multiply(tgt.multiply(tgt.K(ka), tgt.F(ib)), tgt.K(kb))
                record(f'K{j_datum.names[a]} F{j_datum.names[b]}', lhs - tgt.F(ib).scale(ratq(1) / scale))
                comm = tgt.commutator(tgt.E(self.s.iota[a]), tgt.F(ib))
                if a == b:
                    h = self.map_mu(src.h_mu(src.unit_mu(a)))
                    h_inv = self.map_mu(src.h_mu(src.unit_mu(a, -1)))
                    expected = (tgt.K(h) - tgt.K(h_inv)).scale(qi_bracket(j_datum.c(a)))
                else:
                    expected = tgt.zero()
                record(f'[E{j_datum.names[a]}, F{j_datum.names[b]}]', comm - expected)
                if a != b:
                    words = src.half.serre_element(a, b)
                    record(f'Serre F({j_datum.names[a]},{j_datum.names[b]})',
                           tgt.element({(self.map_word(w), tgt.zero_mu, ()): c for w, c in words.items()}))
                    record(f'Serre E({j_datum.names[a]},{j_datum.names[b]})',
                           tgt.element({((), tgt.zero_mu, self.map_word(w)): c for w, c in words.items()}))
        failed = [c.name for c in checks if not c.passed]
        logger.debug('Embedding relation checks: %d, failed: %s', len(checks), failed or 'none')
        return checks


def iota_map(s: SubRootDatum, max_degree: int = 6, target: QuantumGroup | None = None) -> SubAlgebraEmbedding:
    """U_q(J) -> U_q(T) for a sub-root datum, building whichever algebras are missing."""
    source = QuantumGroup(s.sub, max_degree=max_degree)
    if target is None:
        target = QuantumGroup(s.ambient, grading=s.D, max_degree=max_degree)
    return SubAlgebraEmbedding(s, source, target)
