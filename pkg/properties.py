"""
Seeded property suites over one sub-root datum.  The `selftest` command and
the pytest suite run the same checks.

Every check stays inside the engine's degree bound, so a bound of 0 leaves
only the degree-0 checks; the rest are reported as skipped.
"""
import itertools
import logging

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from exceptions import ConsistencyError
from linalg import axpy
from qfield import ONE, RatQ, evaluate, qi_bracket, qpow, ratq
from uqalgebra import Tensor, UElement, format_element
from uqalgebra.quantumgroup import compositions
from braided import BraidedHopfAlgebra, braid_equation_holds, braiding_matrix, is_invertible


logger = logging.getLogger(__name__)

EVALUATION_POINT = Fraction(3, 2)


@dataclass(frozen=True)
class PropertyResult:
    name: str
    passed: bool
    checked: int
    witness: str = ''
    skipped: bool = False


class PropertySuite:
    def __init__(self, engine: BraidedHopfAlgebra, seed: int = 20240611, trials: int = 25,
                 map_trials: int = 100, max_length: int = 2, corrupt_serre: bool = False):
        self.engine = engine
        self.algebra = engine.algebra
        self.projection = engine.projection
        self.rng = np.random.default_rng(seed)
        self.trials = trials
        self.map_trials = map_trials
        self.max_length = max_length
        self.corrupt_serre = corrupt_serre
        self.grading = self.algebra.grading
        self.bound = engine.max_degree
        # words of chi-degree <= 3 are checked up to this many letters
        self.word_length = max(max_length, min(3, self.bound))

    # random data

    def _word(self, length: int, budget: int) -> tuple[tuple[int, ...], int]:
        """Random word of at most length letters using at most budget graded letters."""
        word = []
        for _ in range(length):
            letters = [i for i in range(self.algebra.n) if budget > 0 or i not in self.grading]
            if not letters:
                break
            letter = int(self.rng.choice(letters))
            word.append(letter)
            if letter in self.grading:
                budget -= 1
        return tuple(word), budget

    def random_scalar(self) -> RatQ:
        value = int(self.rng.integers(-3, 4)) or 1
        return ratq(value) * qpow(int(self.rng.integers(-2, 3)))

    def random_element(self, budget: int, borel: bool = False, terms: int = 2) -> UElement:
        algebra = self.algebra
        raw = {}
        for _ in range(terms):
            f, left = self._word(int(self.rng.integers(0, self.max_length + 1)), budget)
            e = ()
            if not borel:
                e, _ = self._word(int(self.rng.integers(0, self.max_length + 1 - len(f))), left)
            mu = tuple(int(v) for v in self.rng.integers(-1, 2, size=algebra.n))
            raw[(f, mu, e)] = self.random_scalar()
        return algebra.element(raw)

    def random_b(self, max_degree: int) -> UElement:
        """Random combination of basis vectors of B_0, ..., B_max_degree."""
        total = self.algebra.zero()
        for n in range(max_degree + 1):
            for value in self.engine.compute_Bn(n).elements:
                if self.rng.random() < 0.5:
                    total = total + value.scale(self.random_scalar())
        return total

    # helpers

    def _result(self, name: str, checked: int, failures: list[str]) -> PropertyResult:
        result = PropertyResult(name, not failures, checked, failures[0] if failures else '')
        logger.debug('%s: %d checked, %d failed', name, checked, len(failures))
        return result

    def _skipped(self, name: str, needed: int) -> PropertyResult:
        logger.info('%s skipped: needs degree bound %d, have %d', name, needed, self.bound)
        return PropertyResult(name, True, 0, skipped=True)

    def _coproduct_leg(self, term):
        return self.algebra.coproduct_terms(term)

    def _words(self, max_length: int, budget: int):
        """Normal terms F_a E_b with len(a) + len(b) <= max_length and at most budget graded letters."""
        algebra = self.algebra
        halves = []
        for length in range(max_length + 1):
            for beta in compositions(length, algebra.n):
                halves.extend(algebra.half.basis(beta))
        for f in halves:
            for e in halves:
                if len(f) + len(e) > max_length:
                    continue
                if algebra.degree((f, algebra.zero_mu, e)) <= budget:
                    yield (f, algebra.zero_mu, e)

    # suites

    def serre_relations(self) -> PropertyResult:
        algebra = self.algebra
        datum = algebra.datum
        failures, checked = [], 0
        corrupted = False
        for i, j in itertools.permutations(range(datum.n), 2):
            words = algebra.half.serre_element(i, j)
            letters = next(iter(words))
            if algebra.degree((letters, algebra.zero_mu, ())) > self.bound:
                continue
            if self.corrupt_serre and not corrupted:
                first = max(words)
                words = {**words, first: words[first] + ONE}
                corrupted = True
            for side in ('F', 'E'):
                terms = {((w, algebra.zero_mu, ()) if side == 'F' else ((), algebra.zero_mu, w)): c
                         for w, c in words.items()}
                residual = algebra.element(terms)
                checked += 1
                if residual:
                    failures.append(f'Serre {side}({datum.names[i]},{datum.names[j]}) = {format_element(residual)}')
        return self._result('q-Serre relations reduce to zero', checked, failures)

    def hopf_axioms(self) -> PropertyResult:
        algebra = self.algebra
        failures, checked = [], 0
        budget = min(3, self.bound)
        mus = [algebra.zero_mu, tuple(int(v) for v in self.rng.integers(-1, 2, size=algebra.n))]
        for base in self._words(self.word_length, budget):
            for mu in mus:
                term = (base[0], mu, base[2])
                x = UElement(algebra, {term: ONE})
                delta = algebra.coproduct(x)
                checked += 1
                left = delta.map_leg(0, self._coproduct_leg, width=2)
                right = delta.map_leg(1, self._coproduct_leg, width=2)
                if left != right:
                    failures.append(f'coassociativity fails on {format_element(x)}')
                eps_left = delta.contract(lambda key: {key[1]: algebra.counit_term(key[0])})
                eps_right = delta.contract(lambda key: {key[0]: algebra.counit_term(key[1])})
                if eps_left != x or eps_right != x:
                    failures.append(f'counit fails on {format_element(x)}')
                unit = algebra.one().scale(algebra.counit(x))
                s_left = delta.contract(lambda key: _product(algebra, algebra.antipode_term(key[0]), {key[1]: ONE}))
                s_right = delta.contract(lambda key: _product(algebra, {key[0]: ONE}, algebra.antipode_term(key[1])))
                if s_left != unit or s_right != unit:
                    failures.append(f'antipode fails on {format_element(x)}')
        return self._result('Hopf axioms on words', checked, failures)

    def algebra_maps(self) -> PropertyResult:
        """Delta and counit are algebra maps, S an anti-algebra map."""
        algebra = self.algebra
        failures = []
        budget = self.bound // 2
        for _ in range(self.map_trials):
            x, y = self.random_element(budget), self.random_element(budget)
            xy = algebra.multiply(x, y)
            if algebra.coproduct(xy) != algebra.coproduct(x) * algebra.coproduct(y):
                failures.append(f'Delta(xy) for x = {format_element(x)}, y = {format_element(y)}')
            if algebra.counit(xy) != algebra.counit(x) * algebra.counit(y):
                failures.append(f'counit(xy) for x = {format_element(x)}, y = {format_element(y)}')
            if algebra.antipode(xy) != algebra.multiply(algebra.antipode(y), algebra.antipode(x)):
                failures.append(f'S(xy) for x = {format_element(x)}, y = {format_element(y)}')
        return self._result('Delta, counit, S on random pairs', self.map_trials, failures)

    def projection_properties(self) -> PropertyResult:
        """Pi is idempotent with coinvariant image; pi is multiplicative and comultiplicative."""
        algebra, projection = self.algebra, self.projection
        failures, checked = [], 0
        budget = min(3, self.bound)
        for term in self._words(self.max_length + 1, budget):
            if term[2]:
                continue
            x = UElement(algebra, {term: ONE})
            image = projection.Pi(x)
            checked += 1
            if projection.Pi(image) != image:
                failures.append(f'Pi(Pi(x)) != Pi(x) for x = {format_element(x)}')
            if not projection.is_coinvariant(image):
                failures.append(f'Pi(x) is not coinvariant for x = {format_element(x)}')
        for _ in range(self.trials):
            x, y = (self.random_element(self.bound // 2, borel=True) for _ in range(2))
            checked += 1
            if projection.pi0(algebra.multiply(x, y)) != algebra.multiply(projection.pi0(x), projection.pi0(y)):
                failures.append(f'pi(xy) != pi(x)pi(y) for x = {format_element(x)}, y = {format_element(y)}')
            lhs = algebra.coproduct(projection.pi0(x))
            rhs = algebra.coproduct(x).map_each(
                lambda t: {t: ONE} if projection.in_degree_zero(t) else {},
                lambda t: {t: ONE} if projection.in_degree_zero(t) else {})
            if lhs != rhs:
                failures.append(f'Delta(pi(x)) != (pi x pi)Delta(x) for x = {format_element(x)}')
        return self._result('Projections pi and Pi', checked, failures)

    def upsilon_properties(self) -> PropertyResult:
        algebra, projection = self.algebra, self.projection
        failures = []
        budget = self.bound // 2
        for _ in range(self.map_trials):
            x, y = (self.random_element(budget, borel=True) for _ in range(2))
            ux, uy = projection.upsilon(x), projection.upsilon(y)
            if projection.upsilon_inverse(ux) != x:
                failures.append(f'Upsilon^-1(Upsilon(x)) != x for x = {format_element(x)}')
            if projection.upsilon(algebra.multiply(x, y)) != projection.bosonisation_product(ux, uy):
                failures.append(f'Upsilon(xy) != Upsilon(x)Upsilon(y) for x = {format_element(x)}, '
                                f'y = {format_element(y)}')
        return self._result('Upsilon onto the bosonisation', self.map_trials, failures)

    def braid_properties(self) -> PropertyResult:
        if self.bound < 2:
            return self._skipped('Braiding on B_1 (x) B_1', 2)
        engine = self.engine
        bm = braiding_matrix(engine)
        failures = []
        if not braid_equation_holds(bm):
            failures.append('braid equation fails on B_1^(x)3')
        if not is_invertible(bm):
            failures.append('Psi is singular on B_1 (x) B_1')
        b1 = engine.compute_B1()
        checked = 2
        # naturality over the Borel part of H_0, which coacts through the coproduct
        for g in engine.generators:
            if g.kind == 'E':
                continue
            h = self.algebra.F(g.index) if g.kind == 'F' else self.algebra.K(self.algebra.unit_mu(g.index))
            for i, j in itertools.product(range(len(b1)), repeat=2):
                checked += 1
                b, c = b1.vectors[i].value, b1.vectors[j].value
                lhs = engine.projection.braid_tensor(tensor_action(engine, h, Tensor.of(b, c)))
                rhs = tensor_action(engine, h, engine.projection.braid(b, c))
                if lhs != rhs:
                    failures.append(f'Psi does not commute with {g.label} on {b1.labels[i]} (x) {b1.labels[j]}')
        return self._result('Braiding on B_1 (x) B_1', checked, failures)

    def braided_multiplicativity(self) -> PropertyResult:
        if self.bound < 2:
            return self._skipped('Braided bialgebra law', 2)
        projection = self.projection
        failures = []
        top = 2 if self.bound >= 4 else 1
        for _ in range(self.trials):
            b, c = self.random_b(top), self.random_b(1)
            lhs = projection.braided_coproduct(self.algebra.multiply(b, c))
            rhs = projection.braided_tensor_product(projection.braided_coproduct(b), projection.braided_coproduct(c))
            if lhs != rhs:
                failures.append(f'Delta_(bc) for b = {format_element(b)}, c = {format_element(c)}')
        return self._result('Braided bialgebra law', self.trials, failures)

    def double_computation(self, top: int = 3) -> PropertyResult:
        failures, checked = [], 0
        for n in range(min(top, self.bound) + 1):
            checked += 1
            try:
                self.engine.compute_Bn(n)
            except ConsistencyError as e:
                failures.append(str(e))
        return self._result('B_n by products equals B_n by projection', checked, failures)

    def pairing_values(self) -> PropertyResult:
        algebra = self.algebra
        datum = algebra.datum
        failures, checked = [], 0
        for i, j in itertools.product(range(datum.n), repeat=2):
            checked += 2
            expected = -qi_bracket(datum.c(i)) if i == j else ratq(0)
            if algebra.pairing(algebra.F(i), algebra.F(j)) != expected:
                failures.append(f'<F_{datum.names[i]}, F_{datum.names[j]}>')
            ki, kj = algebra.K(algebra.unit_mu(i)), algebra.K(algebra.unit_mu(j))
            if algebra.pairing(ki, kj) != qpow(datum.bilinear(algebra.unit_mu(i), algebra.unit_mu(j))):
                failures.append(f'<K_{datum.names[i]}, K_{datum.names[j]}>')
        return self._result('Pairing on generators', checked, failures)

    def evaluation(self) -> PropertyResult:
        failures = []
        for _ in range(self.trials):
            a, b = self.random_scalar() + ONE, self.random_scalar()
            if evaluate(a * b, EVALUATION_POINT) != evaluate(a, EVALUATION_POINT) * evaluate(b, EVALUATION_POINT):
                failures.append(f'evaluation of a product at q = {EVALUATION_POINT}')
            if evaluate(a + b, EVALUATION_POINT) != evaluate(a, EVALUATION_POINT) + evaluate(b, EVALUATION_POINT):
                failures.append(f'evaluation of a sum at q = {EVALUATION_POINT}')
        return self._result('Evaluation at a rational point', self.trials, failures)

    def run(self) -> list[PropertyResult]:
        suites = [
            self.evaluation,
            self.serre_relations,
            self.pairing_values,
            self.hopf_axioms,
            self.algebra_maps,
            self.projection_properties,
            self.upsilon_properties,
            self.double_computation,
            self.braid_properties,
            self.braided_multiplicativity,
        ]
        results = []
        for step, suite in enumerate(suites, start=1):
            logger.info('STEP %d: %s', step, suite.__name__.replace('_', ' '))
            result = suite()
            results.append(result)
            logger.info('%s %s (%d checked)', '✓' if result.passed else '✗', result.name, result.checked)
        return results


def _product(algebra, left: dict, right: dict) -> dict:
    result = {}
    for a, c in left.items():
        for b, d in right.items():
            axpy(result, c * d, algebra.multiply_terms(a, b))
    return result


def tensor_action(engine: BraidedHopfAlgebra, h: UElement, t: Tensor) -> Tensor:
    """h |> (b (x) c) = (h(1) |> b) (x) (h(2) |> c)."""
    algebra = engine.algebra
    result = {}
    for (h1, h2), c in algebra.coproduct(h).terms.items():
        u1, u2 = UElement(algebra, {h1: ONE}), UElement(algebra, {h2: ONE})
        for (b, d), coeff in t.terms.items():
            left = engine.projection.act(u1, UElement(algebra, {b: ONE}))
            right = engine.projection.act(u2, UElement(algebra, {d: ONE}))
            for lt, x in left.terms.items():
                for rt, y in right.terms.items():
                    axpy(result, c * coeff * x * y, {(lt, rt): ONE})
    return Tensor(algebra, result, 2)
