"""
Normal forms for the halves U^- and U^+.

Both halves are copies of the algebra f on letters I modulo the quantum Serre
relations, which is also the quotient of the free algebra by the common kernel
of the right skew derivations.  Each multidegree beta is handled by a lazily
built Component:

* ``words``: the normal words, the lexicographically greedy basis among the
  candidates n + (i) with n a normal word of beta - e_i (so normal words are
  prefix closed);
* ``lift[i][s]``: right multiplication by letter i, taking the s-th normal
  word of beta - e_i to a vector over ``words``;
* ``rbar[k][s]`` and ``r[k][s]``: the two skew derivations of the s-th normal
  word, as vectors over the normal words of beta - e_k.

A candidate is independent exactly when its vector of rbar-images is, because
an element of positive degree vanishes in f iff all its rbar-images do.
"""
import logging
import threading

from dataclasses import dataclass, field

from linalg import LinearSpan, SparseVector, axpy
from qfield import ONE, RatQ, q_binom, qpow, ratq_from_laurent
from rootdata import RootDatum


logger = logging.getLogger(__name__)

Word = tuple[int, ...]
Degree = tuple[int, ...]
WordVector = dict[Word, RatQ]


@dataclass
class Component:
    degree: Degree
    words: list[Word] = field(default_factory=list)
    index: dict[Word, int] = field(default_factory=dict)
    lift: dict[int, list[SparseVector]] = field(default_factory=dict)
    rbar: dict[int, list[SparseVector]] = field(default_factory=dict)
    r: dict[int, list[SparseVector]] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.words)


class HalfAlgebra:
    """The algebra f attached to a root datum, with exact normal forms."""

    def __init__(self, datum: RootDatum):
        self.datum = datum
        self.n = datum.n
        self._components: dict[Degree, Component] = {}
        self._reduced: dict[Word, SparseVector] = {}
        self._lock = threading.RLock()

    def degree_of(self, word: Word) -> Degree:
        counts = [0] * self.n
        for letter in word:
            counts[letter] += 1
        return tuple(counts)

    def _shift(self, degree: Degree, letter: int, step: int) -> Degree:
        return tuple(v + step if k == letter else v for k, v in enumerate(degree))

    def pair_degree(self, k: int, degree: Degree) -> int:
        """k . degree for the symmetric form."""
        return sum(self.datum.dot[k][l] * v for l, v in enumerate(degree) if v)

    def component(self, degree: Degree) -> Component:
        comp = self._components.get(degree)
        if comp is not None:
            return comp
        with self._lock:
            comp = self._components.get(degree)
            if comp is None:
                comp = self._build(degree)
                self._components[degree] = comp
        return comp

    def dimension(self, degree: Degree) -> int:
        return len(self.component(degree))

    def basis(self, degree: Degree) -> list[Word]:
        return list(self.component(degree).words)

    def _lift_vector(self, vector: SparseVector, degree: Degree, letter: int) -> SparseVector:
        """Right multiplication by ``letter`` of a vector over the normal words of ``degree``."""
        target = self.component(self._shift(degree, letter, 1))
        result: SparseVector = {}
        for s, coeff in vector.items():
            axpy(result, coeff, target.lift[letter][s])
        return result

    def _derivations(self, lower: Component, s: int, letter: int, degree: Degree,
                     which: str) -> dict[int, SparseVector]:
        """Leibniz rule for n*letter: d_k(n i) = q^{+-k.i} d_k(n) i + delta_{ki} n."""
        sign = 1 if which == 'rbar' else -1
        images: dict[int, SparseVector] = {}
        table = lower.rbar if which == 'rbar' else lower.r
        for k in range(self.n):
            if not degree[k]:
                continue
            part: SparseVector = {}
            if lower.degree[k]:
                inner = table[k][s]
                if inner:
                    inner_degree = self._shift(lower.degree, k, -1)
                    axpy(part, qpow(sign * self.datum.dot[k][letter]),
                         self._lift_vector(inner, inner_degree, letter))
            if k == letter:
                axpy(part, ONE, {s: ONE})
            images[k] = part
        return images

    def _build(self, degree: Degree) -> Component:
        comp = Component(degree)
        if not any(degree):
            comp.words.append(())
            comp.index[()] = 0
            return comp

        candidates = []
        for letter in range(self.n):
            if degree[letter]:
                lower = self.component(self._shift(degree, letter, -1))
                comp.lift[letter] = [{} for _ in lower.words]
                candidates.extend((word + (letter,), letter, s) for s, word in enumerate(lower.words))
        candidates.sort()
        for k in range(self.n):
            if degree[k]:
                comp.rbar[k] = []
                comp.r[k] = []

        span = LinearSpan()
        dependent = []
        for word, letter, s in candidates:
            lower = self.component(self._shift(degree, letter, -1))
            images = self._derivations(lower, s, letter, degree, 'rbar')
            vector = {(k, t): c for k, part in images.items() for t, c in part.items()}
            if span.add(vector):
                index = len(comp.words)
                comp.words.append(word)
                comp.index[word] = index
                comp.lift[letter][s] = {index: ONE}
                for k, part in images.items():
                    comp.rbar[k].append(part)
                for k, part in self._derivations(lower, s, letter, degree, 'r').items():
                    comp.r[k].append(part)
            else:
                dependent.append((letter, s, vector))
        for letter, s, vector in dependent:
            comp.lift[letter][s] = span.coordinates(vector) or {}

        logger.debug('Normal form component %s: %d words from %d candidates',
                     degree, len(comp.words), len(candidates))
        return comp

    def _reduce_indices(self, word: Word) -> SparseVector:
        cached = self._reduced.get(word)
        if cached is not None:
            return cached
        if not word:
            result = {0: ONE}
        else:
            prefix = word[:-1]
            result = self._lift_vector(self._reduce_indices(prefix), self.degree_of(prefix), word[-1])
        self._reduced[word] = result
        return result

    def _to_words(self, vector: SparseVector, degree: Degree) -> WordVector:
        words = self.component(degree).words
        return {words[s]: c for s, c in vector.items()}

    def reduce_word(self, word: Word) -> WordVector:
        """Normal form of a single word."""
        return self._to_words(self._reduce_indices(word), self.degree_of(word))

    def reduce(self, vector: WordVector) -> WordVector:
        result: WordVector = {}
        for word, coeff in vector.items():
            axpy(result, coeff, self.reduce_word(word))
        return result

    def is_normal(self, word: Word) -> bool:
        return word in self.component(self.degree_of(word)).index

    def _derivation(self, k: int, vector: WordVector, which: str) -> WordVector:
        result: WordVector = {}
        for word, coeff in vector.items():
            degree = self.degree_of(word)
            if not degree[k]:
                continue
            comp = self.component(degree)
            index = comp.index.get(word)
            if index is None:
                axpy(result, coeff, self._derivation(k, self.reduce_word(word), which))
                continue
            table = comp.rbar if which == 'rbar' else comp.r
            axpy(result, coeff, self._to_words(table[k][index], self._shift(degree, k, -1)))
        return result

    def rbar(self, k: int, vector: WordVector) -> WordVector:
        """Sum over positions p with w_p = k of q^{k.wt(w_>p)} (w without p)."""
        return self._derivation(k, vector, 'rbar')

    def r(self, k: int, vector: WordVector) -> WordVector:
        """Sum over positions p with w_p = k of q^{-k.wt(w_>p)} (w without p)."""
        return self._derivation(k, vector, 'r')

    def word_rbar(self, k: int, word: Word) -> WordVector:
        """rbar_k on a raw word, straight from the defining sum (no normal forms)."""
        result: WordVector = {}
        for p, letter in enumerate(word):
            if letter == k:
                exponent = self.pair_degree(k, self.degree_of(word[p + 1:]))
                axpy(result, ONE, {word[:p] + word[p + 1:]: qpow(exponent)})
        return result

    def serre_element(self, i: int, j: int) -> WordVector:
        """sum_r (-1)^r [1-a_ij choose r]_{q_i} F_i^{1-a_ij-r} F_j F_i^r, as raw words."""
        if i == j:
            raise ValueError('Serre relations need i != j')
        m = 1 - self.datum.cartan[i][j]
        c = self.datum.c(i)
        element: WordVector = {}
        for r in range(m + 1):
            coeff = ratq_from_laurent(q_binom(m, r, c))
            word = (i,) * (m - r) + (j,) + (i,) * r
            element[word] = -coeff if r % 2 else coeff
        return element
