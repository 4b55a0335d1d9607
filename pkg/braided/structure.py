"""
Linear-algebra views of B: action tables, the braiding matrix on B_1 (x) B_1,
relations of the multiplication map T^n(B_1) -> B_n, braided primitives, a
Hecke-type detector for Psi, the restricted pairing and integrability.
"""
import itertools
import logging

from dataclasses import dataclass

import pandas as pd
from sympy import Poly, Symbol, factor_list, fraction, together

from exceptions import ConsistencyError
from linalg import identity_rows, kernel, kronecker, rank, sparse_kernel, to_matrix
from qfield import QF, ONE, ZERO, RatQ, format_ratq, q_symbol
from uqalgebra import Tensor, Term, UElement
from braided.degrees import BraidedHopfAlgebra, GradedBasis


logger = logging.getLogger(__name__)

TENSOR = ' (x) '


@dataclass
class ActionTable:
    """``matrices[g][i][k]``: coefficient of basis vector i in g |> b_k."""

    labels: list[str]
    matrices: dict[str, list[list[RatQ]]]

    def image(self, generator: str, k: int) -> dict[int, RatQ]:
        column = [row[k] for row in self.matrices[generator]]
        return {i: c for i, c in enumerate(column) if c}

    def to_frame(self, generator: str) -> pd.DataFrame:
        rows = [[format_ratq(c) for c in row] for row in self.matrices[generator]]
        return pd.DataFrame(rows, index=self.labels, columns=self.labels)

    def to_dict(self) -> dict:
        return {g: [[format_ratq(c) for c in row] for row in m] for g, m in self.matrices.items()}


def action_table(engine: BraidedHopfAlgebra, basis: GradedBasis) -> ActionTable:
    size = len(basis)
    matrices = {}
    for g in engine.generators:
        matrix = [[ZERO] * size for _ in range(size)]
        for k, vector in enumerate(basis.vectors):
            image = engine.act(g, vector.value)
            coords = basis.coordinates(image)
            if coords is None:
                raise ConsistencyError('action', f'{g.label} |> {basis.labels[k]} leaves B_{basis.degree}')
            for i, c in coords.items():
                matrix[i][k] = c
        matrices[g.label] = matrix
    logger.debug('Action table on B_%d computed for %d generators', basis.degree, len(matrices))
    return ActionTable(list(basis.labels), matrices)


def tensor_coordinates(t: Tensor, left: GradedBasis, right: GradedBasis) -> dict[tuple[int, int], RatQ]:
    """Coefficients of t on the basis pairs of left (x) right."""
    by_right: dict[Term, dict[Term, RatQ]] = {}
    for (a, b), c in t.terms.items():
        by_right.setdefault(b, {})[a] = c
    partial: dict[int, dict[Term, RatQ]] = {}
    for b, vector in by_right.items():
        coords = left.span.coordinates(vector)
        if coords is None:
            raise ConsistencyError('tensor', f'left legs leave B_{left.degree}')
        for i, c in coords.items():
            partial.setdefault(i, {})[b] = c
    result = {}
    for i, vector in partial.items():
        coords = right.span.coordinates(vector)
        if coords is None:
            raise ConsistencyError('tensor', f'right legs leave B_{right.degree}')
        for j, c in coords.items():
            result[(i, j)] = c
    return result


@dataclass
class BraidingMatrix:
    """Psi on left (x) right; column (i, j) holds the coordinates of Psi(b_i (x) c_j)
    on the pairs (c_k, b_l) of right (x) left."""

    left: GradedBasis
    right: GradedBasis
    matrix: list[list[RatQ]]

    @property
    def size(self) -> int:
        return len(self.matrix)

    def column(self, i: int, j: int) -> dict[tuple[int, int], RatQ]:
        m = len(self.left)
        col = i * len(self.right) + j
        result = {}
        for row, values in enumerate(self.matrix):
            if values[col]:
                result[divmod(row, m)] = values[col]
        return result

    def entries(self) -> list[str]:
        lines = []
        for i, j in itertools.product(range(len(self.left)), range(len(self.right))):
            image = ' + '.join(f'({format_ratq(c)})*{self.right.labels[k]}{TENSOR}{self.left.labels[l]}'
                               for (k, l), c in sorted(self.column(i, j).items())) or '0'
            lines.append(f'Psi({self.left.labels[i]}{TENSOR}{self.right.labels[j]}) = {image}')
        return lines

    def to_frame(self) -> pd.DataFrame:
        cols = [f'{a}{TENSOR}{b}' for a in self.left.labels for b in self.right.labels]
        rows = [f'{a}{TENSOR}{b}' for a in self.right.labels for b in self.left.labels]
        return pd.DataFrame([[format_ratq(c) for c in row] for row in self.matrix], index=rows, columns=cols)


def braiding_matrix(engine: BraidedHopfAlgebra, left_degree: int = 1, right_degree: int = 1) -> BraidingMatrix:
    left = engine.compute_Bn(left_degree)
    right = engine.compute_Bn(right_degree)
    size = len(left) * len(right)
    matrix = [[ZERO] * size for _ in range(size)]
    for i, b in enumerate(left.vectors):
        for j, c in enumerate(right.vectors):
            image = engine.projection.braid(b.value, c.value)
            for (k, l), coeff in tensor_coordinates(image, right, left).items():
                matrix[k * len(left) + l][i * len(right) + j] = coeff
    return BraidingMatrix(left, right, matrix)


def is_invertible(bm: BraidingMatrix) -> bool:
    if not bm.size:
        return True
    return bool(to_matrix(bm.matrix, bm.size).det())


def braid_equation_holds(bm: BraidingMatrix) -> bool:
    """(Psi x 1)(1 x Psi)(Psi x 1) = (1 x Psi)(Psi x 1)(1 x Psi) on B_1^(x)3."""
    m = len(bm.left)
    if len(bm.right) != m:
        raise ValueError('braid equation needs Psi on V (x) V')
    if not m:
        return True
    identity = identity_rows(m)
    size = m ** 3
    first = to_matrix(kronecker(bm.matrix, identity), size)
    second = to_matrix(kronecker(identity, bm.matrix), size)
    return first * second * first == second * first * second


@dataclass
class RelationSpace:
    degree: int
    words: list[tuple[int, ...]]
    relations: list[list[RatQ]]

    @property
    def dimension(self) -> int:
        return len(self.relations)

    def formatted(self, labels: list[str]) -> list[str]:
        lines = []
        for relation in self.relations:
            pieces = []
            for word, c in zip(self.words, relation):
                if c:
                    pieces.append(f'({format_ratq(c)})*{TENSOR.join(labels[k] for k in word)}')
            lines.append(' + '.join(pieces))
        return lines


def relations_at_degree(engine: BraidedHopfAlgebra, n: int) -> RelationSpace:
    """Kernel of b_{i1} (x) ... (x) b_{in} -> b_{i1} ... b_{in}."""
    engine.algebra.check_degree(n, 'relations')
    b1 = engine.compute_B1()
    words = list(itertools.product(range(len(b1)), repeat=n))
    products: dict[tuple[int, ...], UElement] = {(): engine.algebra.one()}
    vectors = []
    for word in words:
        for length in range(1, n + 1):
            prefix = word[:length]
            if prefix not in products:
                products[prefix] = engine.algebra.multiply(products[prefix[:-1]], b1.vectors[prefix[-1]].value)
        vectors.append(products[word].terms)
    relations = sparse_kernel(vectors) if vectors else []
    logger.info('Relations in degree %d: %d of %d tensor words', n, len(relations), len(words))
    return RelationSpace(n, words, relations)


@dataclass
class PrimitiveSpace:
    degree: int
    basis_dim: int
    combinations: list[list[RatQ]]

    @property
    def dimension(self) -> int:
        return len(self.combinations)


def reduced_coproduct(engine: BraidedHopfAlgebra, b: UElement) -> Tensor:
    one = engine.algebra.one()
    return engine.projection.braided_coproduct(b) - Tensor.of(b, one) - Tensor.of(one, b)


def primitives_at_degree(engine: BraidedHopfAlgebra, n: int) -> PrimitiveSpace:
    basis = engine.compute_Bn(n)
    vectors = [reduced_coproduct(engine, v.value).terms for v in basis.vectors]
    combinations = sparse_kernel(vectors) if vectors else []
    logger.info('Braided primitives in degree %d: %d of %d', n, len(combinations), len(basis))
    return PrimitiveSpace(n, len(basis), combinations)


@dataclass(frozen=True)
class HeckeResult:
    alpha: RatQ
    beta: RatQ | None
    multiplicities: tuple[int, ...]

    def describe(self) -> str:
        if self.beta is None:
            return f'Psi = {format_ratq(self.alpha)} id'
        return f'(Psi - {format_ratq(self.alpha)})(Psi + {format_ratq(self.beta)}) = 0'


def _eigenvalues(a: RatQ, b: RatQ) -> list[RatQ]:
    """Roots in Q(q) of t^2 - a t - b, when it splits."""
    t = Symbol('t')
    numerator, _ = fraction(together(t ** 2 - QF.to_sympy(a) * t - QF.to_sympy(b)))
    roots = []
    for factor, multiplicity in factor_list(numerator, t, q_symbol)[1]:
        poly = Poly(factor, t)
        if poly.degree() == 1:
            lead, constant = poly.all_coeffs()
            roots.extend([QF.from_sympy(-constant / lead)] * multiplicity)
    return roots


def hecke_detector(bm: BraidingMatrix) -> HeckeResult | None:
    """Search (Psi - alpha)(Psi + beta) = 0; None when Psi has no split quadratic minimal polynomial."""
    size = bm.size
    if not size:
        return None
    matrix = bm.matrix
    diagonal = {matrix[i][i] for i in range(size)}
    scalar = len(diagonal) == 1 and all(not matrix[r][c] for r in range(size) for c in range(size) if r != c)
    if scalar:
        return HeckeResult(diagonal.pop(), None, (size,))
    square = (to_matrix(matrix, size) * to_matrix(matrix, size)).to_list()
    rows = [[matrix[r][c], ONE if r == c else ZERO, square[r][c]] for r in range(size) for c in range(size)]
    solution = next((v for v in kernel(rows, 3) if v[2]), None)
    if solution is None:
        return None
    a, b = -solution[0] / solution[2], -solution[1] / solution[2]
    roots = _eigenvalues(a, b)
    if len(roots) != 2:
        return None
    multiplicities = []
    for root in roots:
        shifted = [[matrix[r][c] - (root if r == c else ZERO) for c in range(size)] for r in range(size)]
        multiplicities.append(size - rank(shifted, size))
    first, second = (0, 1) if multiplicities[0] >= multiplicities[1] else (1, 0)
    return HeckeResult(roots[first], -roots[second], (multiplicities[first], multiplicities[second]))


def pairing_rank(engine: BraidedHopfAlgebra, n: int) -> tuple[int, int]:
    """Rank and size of the Gram matrix of the Borel pairing on B_n."""
    basis = engine.compute_Bn(n)
    values = basis.elements
    gram = [[engine.algebra.pairing(x, y) for y in values] for x in values]
    return rank(gram, len(values)), len(values)


@dataclass
class IntegrabilityReport:
    nilbound: int
    degrees: dict[tuple[str, str], int | None]

    @property
    def passed(self) -> bool:
        return all(k is not None for k in self.degrees.values())

    def failures(self) -> list[tuple[str, str]]:
        return [key for key, k in self.degrees.items() if k is None]


def integrability_check(engine: BraidedHopfAlgebra, basis: GradedBasis, nilbound: int) -> IntegrabilityReport:
    """Smallest k <= nilbound with E_j^k |> b = 0 and F_j^k |> b = 0, for j in iota(J)."""
    degrees = {}
    for label, vector in zip(basis.labels, basis.vectors):
        for g in engine.generators:
            if g.kind == 'K':
                continue
            x, k = vector.value, 0
            while x and k < nilbound:
                x = engine.act(g, x)
                k += 1
            degrees[(label, g.label)] = None if x else k
    report = IntegrabilityReport(nilbound, degrees)
    if not report.passed:
        logger.warning('Integrability: no nilpotency within %d for %s', nilbound, report.failures())
    return report
