"""
Graded pieces of B(T, J, iota, q).

B_1 is the orbit closure of {F_d H_d : d in D} under the adjoint action of
E_j, F_j (j in iota(J)) and all K_i.  Higher B_n are computed twice:

* by products, as the span of B_{n-1} B_1;
* by projection, as the span of Pi(F_a) over normal words a of chi_D-degree n
  whose iota(J)-letter counts stay within n times the largest count seen in
  a B_1 vector.

The two spans must coincide; a mismatch is an engine bug and is raised as a
ConsistencyError.
"""
import itertools
import logging

from dataclasses import dataclass, field

from exceptions import ConsistencyError, OrbitCapError
from linalg import LinearSpan, SparseVector
from qfield import ONE, RatQ
from rootdata import SubRootDatum, is_dominant
from uqalgebra import QuantumGroup, UElement
from uqalgebra.quantumgroup import compositions
from braided.projection import Projection


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Generator:
    """A generator acting on B through the adjoint action."""

    kind: str
    index: int
    label: str


@dataclass
class BElement:
    value: UElement
    degree: int
    weight: tuple[int, ...] | None

    @classmethod
    def build(cls, projection: Projection, value: UElement, check: bool = True) -> 'BElement':
        """Wrap value, verifying coinvariance unless the caller already knows it."""
        if check and not projection.is_coinvariant(value):
            raise ConsistencyError('coinvariance', f'{value!r} is not a coinvariant')
        degrees = value.f_degrees()
        chis = {projection.s.chi_of_degree(d) for d in degrees}
        if len(chis) > 1:
            raise ConsistencyError('grading', f'{value!r} mixes chi_D-degrees {sorted(chis)}')
        weight = tuple(-v for v in next(iter(degrees))) if len(degrees) == 1 else None
        return cls(value, chis.pop() if chis else 0, weight)


@dataclass
class GradedBasis:
    degree: int
    vectors: list[BElement] = field(default_factory=list)
    span: LinearSpan = field(default_factory=LinearSpan)
    labels: list[str] = field(default_factory=list)
    origins: list[str] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.vectors)

    def add(self, element: BElement, label: str, origin: str = '') -> bool:
        if not self.span.add(element.value.terms):
            return False
        self.vectors.append(element)
        self.labels.append(label)
        self.origins.append(origin)
        return True

    @property
    def elements(self) -> list[UElement]:
        return [v.value for v in self.vectors]

    @property
    def pivots(self) -> dict:
        return {pivot: k for k, pivot in enumerate(self.span.pivots)}

    def contains(self, x: UElement) -> bool:
        return self.span.contains(x.terms)

    def coordinates(self, x: UElement) -> SparseVector | None:
        return self.span.coordinates(x.terms)


@dataclass(frozen=True)
class AgreementCertificate:
    degree: int
    products_dim: int
    projection_dim: int
    projected_words: int
    window: tuple[int, ...]

    @property
    def agree(self) -> bool:
        return self.products_dim == self.projection_dim


@dataclass(frozen=True)
class ModuleGenerator:
    word: tuple[int, ...]
    element: BElement
    weight: tuple[int, ...]
    coinvariant: bool
    primitive: bool


@dataclass(frozen=True)
class HighestWeight:
    d: int
    weight: tuple[int, ...]
    dimension: int
    primitive: bool
    dominant: bool


@dataclass(frozen=True)
class IndexReport:
    index: int | None
    corank: int

    @property
    def capped(self) -> bool:
        return self.index is None


class BraidedHopfAlgebra:
    """B(T, J, iota, q) for a sub-root datum, computed degree by degree."""

    def __init__(self, s: SubRootDatum, max_degree: int = 6, orbit_cap: int = 512):
        self.s = s
        self.orbit_cap = orbit_cap
        self.algebra = QuantumGroup(s.ambient, grading=s.D, max_degree=max_degree)
        self.projection = Projection(s, self.algebra)
        names = s.ambient.names
        inner = sorted(set(s.iota))
        self.generators = ([Generator('F', j, f'F[{names[j]}]') for j in inner]
                           + [Generator('E', j, f'E[{names[j]}]') for j in inner]
                           + [Generator('K', i, f'K[{names[i]}]') for i in range(s.ambient.n)])
        self._bases: dict[int, GradedBasis] = {}
        self.certificates: dict[int, AgreementCertificate] = {}

    @property
    def max_degree(self) -> int:
        return self.algebra.max_degree

    def act(self, g: Generator, x: UElement) -> UElement:
        algebra = self.algebra
        if g.kind == 'F':
            return algebra.ad_F(g.index, x)
        if g.kind == 'E':
            return algebra.ad_E(g.index, x)
        return algebra.ad_K(algebra.unit_mu(g.index), x)

    def seed(self, d: int) -> UElement:
        """F_d H_d."""
        algebra = self.algebra
        return algebra.monomial((d,), algebra.h_mu(algebra.unit_mu(d)))

    def _orbit(self, seeds: list[tuple[UElement, str]], degree: int) -> GradedBasis:
        """Breadth-first closure under the generators, capped at orbit_cap."""
        basis = GradedBasis(degree)
        wave: list[tuple[UElement, str]] = []
        for value, origin in seeds:
            if basis.add(BElement.build(self.projection, value), f'b{len(basis) + 1}', origin):
                wave.append((value, basis.labels[-1]))
        while wave:
            next_wave = []
            for value, label in wave:
                for g in self.generators:
                    image = self.act(g, value)
                    if not image or basis.contains(image):
                        continue
                    if basis.add(BElement.build(self.projection, image), f'b{len(basis) + 1}', f'{g.label} |> {label}'):
                        next_wave.append((image, basis.labels[-1]))
                        if len(basis) > self.orbit_cap:
                            raise OrbitCapError(f'Orbit of degree {degree} exceeds the cap {self.orbit_cap}',
                                                self.orbit_cap, partial=basis)
            logger.debug('Orbit wave: %d new vectors, %d total', len(next_wave), len(basis))
            wave = next_wave
        return basis

    def compute_B1(self) -> GradedBasis:
        cached = self._bases.get(1)
        if cached is not None:
            return cached
        self.algebra.check_degree(1, 'B_1')
        names = self.s.ambient.names
        basis = self._orbit([(self.seed(d), f'F[{names[d]}]H[{names[d]}]') for d in self.s.D], 1)
        logger.info('B_1 of %s has dimension %d', self.s.label(), len(basis))
        self._bases[1] = basis
        return basis

    def _degree_zero(self) -> GradedBasis:
        basis = GradedBasis(0)
        basis.add(BElement(self.algebra.one(), 0, self.algebra.zero_mu), '1', 'unit')
        return basis

    def _window(self, n: int) -> tuple[int, ...]:
        """Per-letter bound on iota(J)-letters of the words projected in degree n."""
        b1 = self.compute_B1()
        bounds = [0] * self.s.ambient.n
        for vector in b1.vectors:
            for f, _, _ in vector.value.terms:
                for j in set(self.s.iota):
                    bounds[j] = max(bounds[j], f.count(j))
        return tuple(n * b for b in bounds)

    def _by_products(self, n: int) -> GradedBasis:
        previous = self.compute_Bn(n - 1)
        b1 = self.compute_B1()
        basis = GradedBasis(n)
        for left, left_label in zip(previous.vectors, previous.labels):
            for right, right_label in zip(b1.vectors, b1.labels):
                product = self.algebra.multiply(left.value, right.value)
                label = right_label if left_label == '1' else f'{left_label}*{right_label}'
                if product and basis.add(BElement.build(self.projection, product, check=False), label, 'product'):
                    if len(basis) > self.orbit_cap:
                        raise OrbitCapError(f'B_{n} exceeds the cap {self.orbit_cap}', self.orbit_cap, partial=basis)
        return basis

    def _projected_degrees(self, n: int, window: tuple[int, ...]):
        D = self.s.D
        inner = sorted(set(self.s.iota))
        for d_part in compositions(n, len(D)):
            for j_part in itertools.product(*(range(window[j] + 1) for j in inner)):
                beta = [0] * self.s.ambient.n
                for d, v in zip(D, d_part):
                    beta[d] = v
                for j, v in zip(inner, j_part):
                    beta[j] = v
                yield tuple(beta)

    def _by_projection(self, n: int) -> tuple[LinearSpan, int, tuple[int, ...]]:
        window = self._window(n)
        span = LinearSpan()
        count = 0
        for beta in self._projected_degrees(n, window):
            for word in self.algebra.half.basis(beta):
                count += 1
                image = self.projection.Pi(self.algebra.monomial(word))
                if image:
                    span.add(image.terms)
        return span, count, window

    def coinvariants(self, n: int) -> LinearSpan:
        """Span of Pi over the words of degree n inside the projection window."""
        return self._by_projection(n)[0]

    def compute_Bn(self, n: int) -> GradedBasis:
        cached = self._bases.get(n)
        if cached is not None:
            return cached
        if n == 0:
            basis = self._degree_zero()
            self._bases[0] = basis
            return basis
        self.algebra.check_degree(n, f'B_{n}')
        basis = self.compute_B1() if n == 1 else self._by_products(n)
        span, count, window = self._by_projection(n)
        certificate = AgreementCertificate(n, len(basis), len(span), count, window)
        if not certificate.agree:
            raise ConsistencyError(f'B_{n}', f'products give dimension {len(basis)}, '
                                             f'coinvariant projection gives {len(span)}')
        for k, vector in enumerate(span.basis):
            if not basis.span.contains(vector):
                raise ConsistencyError(f'B_{n}', f'projected vector {k} is not a combination of products')
        for k, vector in enumerate(basis.vectors):
            if not span.contains(vector.value.terms):
                raise ConsistencyError(f'B_{n}', f'{basis.labels[k]} is not in the projected span')
        logger.info('B_%d has dimension %d (%d words projected)', n, len(basis), count)
        self._bases[n] = basis
        self.certificates[n] = certificate
        return basis

    def hilbert_series(self, N: int) -> list[int]:
        return [len(self.compute_Bn(n)) for n in range(N + 1)]

    def module_generators(self, maxlen: int) -> list[ModuleGenerator]:
        """F_gamma H_gamma for words gamma in D of length <= maxlen."""
        self.algebra.check_degree(maxlen, 'module generators')
        algebra = self.algebra
        generators = []
        for length in range(maxlen + 1):
            for gamma in itertools.product(self.s.D, repeat=length):
                beta = algebra.half.degree_of(gamma)
                value = algebra.element({(gamma, algebra.h_mu(beta), ()): ONE})
                if not value:
                    continue
                coinvariant = self.projection.is_coinvariant(value)
                primitive = all(not algebra.ad_E(j, value) for j in set(self.s.iota))
                weight = self.s.rho(self.s.ambient.wt2(tuple(-b for b in beta)))
                generators.append(ModuleGenerator(gamma, BElement.build(self.projection, value, check=False),
                                                  weight, coinvariant, primitive))
        return generators

    def highest_weights(self) -> list[HighestWeight]:
        """Per d in D: rho(wt2(-d)), dim V(lambda'_d) and its primitivity certificate."""
        results = []
        names = self.s.ambient.names
        sub = self.s.sub
        for d in self.s.D:
            seed = self.seed(d)
            orbit = self._orbit([(seed, f'F[{names[d]}]H[{names[d]}]')], 1)
            weight = self.s.rho(self.s.ambient.wt2(self.algebra.unit_mu(d, -1)))
            primitive = all(not self.algebra.ad_E(j, seed) for j in set(self.s.iota))
            dominant = is_dominant(sub, weight, range(sub.n))
            results.append(HighestWeight(d, weight, len(orbit), primitive, dominant))
        return results

    def index_and_corank(self) -> IndexReport:
        corank = len(self.s.D)
        try:
            index = len(self.compute_B1())
        except OrbitCapError:
            logger.warning('Index of %s exceeds the orbit cap %d', self.s.label(), self.orbit_cap)
            index = None
        return IndexReport(index, corank)

    def basis_coefficients(self, x: UElement, n: int) -> dict[int, RatQ]:
        coords = self.compute_Bn(n).coordinates(x)
        if coords is None:
            raise ConsistencyError(f'B_{n}', f'{x!r} is not in B_{n}')
        return coords
