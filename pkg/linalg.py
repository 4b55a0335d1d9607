"""
Exact linear algebra over Q(q) and over the integers.

Sparse vectors are plain dicts mapping a sortable key to a nonzero RatQ.
Dense work (kernels, ranks, reduced row echelon forms) goes through sympy's
DomainMatrix; lattice work (free quotients, complements) through the Smith
normal form in ``sympy.polys.matrices.normalforms``.
"""
import logging

from collections.abc import Hashable, Iterable, Sequence

from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors, smith_normal_decomp

from qfield import QF, RatQ


logger = logging.getLogger(__name__)

SparseVector = dict[Hashable, RatQ]


def axpy(target: SparseVector, coeff: RatQ, source: SparseVector) -> None:
    """target += coeff * source, in place, dropping cancelled entries."""
    if not coeff:
        return
    for key, value in source.items():
        new = target.get(key, QF.zero) + coeff * value
        if new:
            target[key] = new
        else:
            target.pop(key, None)


def scaled(coeff: RatQ, source: SparseVector) -> SparseVector:
    if not coeff:
        return {}
    return {key: coeff * value for key, value in source.items()}


class LinearSpan:
    """Incremental echelon form that remembers how each row was built.

    ``basis`` keeps the vectors exactly as they were accepted; the echelon
    rows are an internal device for independence tests and coordinates.
    """

    def __init__(self):
        self.basis: list[SparseVector] = []
        self._rows: list[tuple[Hashable, SparseVector, SparseVector]] = []

    def __len__(self) -> int:
        return len(self.basis)

    def _reduce(self, vector: SparseVector) -> tuple[SparseVector, SparseVector]:
        residual = dict(vector)
        combo: SparseVector = {}
        for pivot, row, row_combo in self._rows:
            coeff = residual.get(pivot)
            if coeff:
                axpy(residual, -coeff, row)
                axpy(combo, coeff, row_combo)
        return residual, combo

    def add(self, vector: SparseVector) -> bool:
        """Accept vector when it is independent of the span so far."""
        residual, combo = self._reduce(vector)
        if not residual:
            return False
        pivot = min(residual)
        inverse = QF.one / residual[pivot]
        index = len(self.basis)
        self.basis.append(dict(vector))
        row_combo = scaled(-inverse, combo)
        row_combo[index] = inverse
        self._rows.append((pivot, scaled(inverse, residual), row_combo))
        return True

    @property
    def pivots(self) -> list[Hashable]:
        """Pivot key of the echelon row created when basis[k] was accepted."""
        return [pivot for pivot, _, _ in self._rows]

    def contains(self, vector: SparseVector) -> bool:
        return not self._reduce(vector)[0]

    def coordinates(self, vector: SparseVector) -> SparseVector | None:
        """Coefficients on ``basis`` reproducing vector, or None outside the span."""
        residual, combo = self._reduce(vector)
        if residual:
            return None
        return combo


def keys_of(vectors: Iterable[SparseVector]) -> list[Hashable]:
    keys = set()
    for vector in vectors:
        keys.update(vector)
    return sorted(keys)


def to_matrix(rows: Sequence[Sequence[RatQ]], ncols: int) -> DomainMatrix:
    return DomainMatrix([list(row) for row in rows], (len(rows), ncols), QF)


def dense_rows(vectors: Sequence[SparseVector], keys: Sequence[Hashable]) -> list[list[RatQ]]:
    return [[vector.get(key, QF.zero) for key in keys] for vector in vectors]


def kernel(rows: Sequence[Sequence[RatQ]], ncols: int) -> list[list[RatQ]]:
    """Basis of {x : M x = 0} in reduced form, one list per vector."""
    if not rows:
        return [[QF.one if i == j else QF.zero for j in range(ncols)] for i in range(ncols)]
    null = to_matrix(rows, ncols).nullspace()
    return [list(row) for row in null.to_list()] if null.shape[0] else []


def left_kernel(rows: Sequence[Sequence[RatQ]], ncols: int) -> list[list[RatQ]]:
    """Basis of {c : c M = 0}, i.e. the linear relations among the rows."""
    if not rows:
        return []
    transposed = [[rows[r][c] for r in range(len(rows))] for c in range(ncols)]
    return kernel(transposed, len(rows))


def rank(rows: Sequence[Sequence[RatQ]], ncols: int) -> int:
    if not rows or not ncols:
        return 0
    return to_matrix(rows, ncols).rank()


def rref_rows(rows: Sequence[Sequence[RatQ]], ncols: int) -> list[list[RatQ]]:
    """Nonzero rows of the reduced row echelon form."""
    if not rows:
        return []
    reduced, pivots = to_matrix(rows, ncols).rref()
    return [list(row) for row in reduced.to_list()[:len(pivots)]]


def identity_rows(size: int) -> list[list[RatQ]]:
    return [[QF.one if i == j else QF.zero for j in range(size)] for i in range(size)]


def kronecker(a: Sequence[Sequence[RatQ]], b: Sequence[Sequence[RatQ]]) -> list[list[RatQ]]:
    """Dense Kronecker product, rows of a (x) b indexed by (row of a, row of b)."""
    return [[x * y for x in row_a for y in row_b] for row_a in a for row_b in b]


def sparse_kernel(vectors: Sequence[SparseVector]) -> list[list[RatQ]]:
    """Linear relations among sparse vectors, as coefficient lists."""
    keys = keys_of(vectors)
    return rref_rows(left_kernel(dense_rows(vectors, keys), len(keys)), len(vectors))


# Integer lattices. Matrices are lists of rows.

def int_matrix(rows: Sequence[Sequence[int]], ncols: int | None = None) -> DomainMatrix:
    ncols = len(rows[0]) if rows else (ncols or 0)
    return DomainMatrix([[ZZ(int(v)) for v in row] for row in rows], (len(rows), ncols), ZZ)


def columns_to_rows(columns: Sequence[Sequence[int]], length: int) -> list[list[int]]:
    return [[int(column[r]) for column in columns] for r in range(length)]


def elementary_divisors(rows: Sequence[Sequence[int]], ncols: int | None = None) -> list[int]:
    matrix = int_matrix(rows, ncols)
    if 0 in matrix.shape:
        return []
    return [abs(int(v)) for v in invariant_factors(matrix)]


def is_saturated_injection(columns: Sequence[Sequence[int]], length: int) -> tuple[bool, list[int]]:
    """Whether the map with these image columns is injective with free cokernel."""
    if not columns:
        return True, []
    divisors = elementary_divisors(columns_to_rows(columns, length))
    nonzero = [d for d in divisors if d]
    return len(nonzero) == len(columns) and all(d == 1 for d in nonzero), divisors


def integer_kernel(rows: Sequence[Sequence[int]], ncols: int) -> list[list[int]]:
    """Z-basis of {x in Z^ncols : A x = 0}, from the Smith decomposition S A T = D."""
    if not ncols:
        return []
    if not rows:
        return [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    smith, _, t = smith_normal_decomp(int_matrix(rows, ncols))
    smith = smith.to_list()
    t = t.to_list()
    basis = []
    for col in range(ncols):
        if all(smith[r][col] == 0 for r in range(len(smith))):
            basis.append([int(t[r][col]) for r in range(ncols)])
    return basis


def int_det(rows: Sequence[Sequence[int]]) -> int:
    if not rows:
        return 1
    return int(int_matrix(rows).det())


def solve_unimodular(columns: Sequence[Sequence[int]], target: Sequence[int]) -> list[int] | None:
    """Integer coordinates of target on a square basis, or None if not integral."""
    n = len(target)
    matrix = int_matrix(columns_to_rows(columns, n)).convert_to(QQ)
    rhs = DomainMatrix([[QQ(int(v))] for v in target], (n, 1), QQ)
    solution = matrix.inv() * rhs
    coords = []
    for (value,) in solution.to_list():
        if value.denominator != 1:
            return None
        coords.append(int(value.numerator))
    return coords
