"""
Root data, sub-root data and the lattice maps built on them.

A root datum is (I, dot, Y, X, <,>, i1, i2) with Y = Z^rankY, X = Z^rankX and
all maps stored as integer vectors in the fixed coordinate order.  A sub-root
datum carries an injective iota: J -> I, the lattice maps s_Y, s_X (stored as
lists of image vectors of the basis of Y', X') and a complement X'' of s_X(X').

Positions, not names, are used internally; names only appear at the file and
report boundary.
"""
import itertools
import logging

from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

import numpy as np

from exceptions import DatumFormatError, InputError
from linalg import elementary_divisors, int_det, integer_kernel, is_saturated_injection, solve_unimodular
from utils import check_fields, int_rows, int_vector, read_json


logger = logging.getLogger(__name__)

Vector = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]

DATUM_REQUIRED = {'I', 'dot', 'rankY', 'rankX', 'pairing', 'i1', 'i2'}
DATUM_OPTIONAL = {'name'}
SUB_REQUIRED = {'ambient', 'sub', 'iota', 'sY', 'sX'}
SUB_OPTIONAL = {'Xpp', 'name'}


@dataclass(frozen=True)
class ConditionResult:
    label: str
    title: str
    passed: bool
    witness: str = ''


@dataclass(frozen=True)
class ValidationReport:
    subject: str
    conditions: tuple[ConditionResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.conditions)

    @property
    def failed(self) -> list[str]:
        return [c.label for c in self.conditions if not c.passed]

    def require(self) -> None:
        """Raise InputError naming the first failed condition."""
        for c in self.conditions:
            if not c.passed:
                raise InputError(f'{self.subject}: condition {c.label} ({c.title}) fails: {c.witness}')


@dataclass(frozen=True)
class RootDatum:
    names: tuple[str, ...]
    dot: Matrix
    rank_y: int
    rank_x: int
    pairing: Matrix
    i1: Matrix
    i2: Matrix
    name: str = field(default='', compare=False)

    @property
    def n(self) -> int:
        return len(self.names)

    @cached_property
    def cartan(self) -> Matrix:
        return tuple(tuple(2 * self.dot[i][j] // self.dot[i][i] for j in range(self.n))
                     for i in range(self.n))

    @cached_property
    def _pairing(self) -> np.ndarray:
        return np.array(self.pairing, dtype=np.int64).reshape(self.rank_y, self.rank_x)

    @cached_property
    def _i1(self) -> np.ndarray:
        return np.array(self.i1, dtype=np.int64).reshape(self.n, self.rank_y)

    @cached_property
    def _i2(self) -> np.ndarray:
        return np.array(self.i2, dtype=np.int64).reshape(self.n, self.rank_x)

    @cached_property
    def _cartan(self) -> np.ndarray:
        return np.array(self.cartan, dtype=np.int64).reshape(self.n, self.n)

    def c(self, i: int) -> int:
        return self.dot[i][i] // 2

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError as e:
            raise InputError(f'Unknown index {name!r} in datum {self.name or self.names}') from e

    def ip(self, y, x) -> int:
        return int(np.asarray(y, dtype=np.int64) @ self._pairing @ np.asarray(x, dtype=np.int64))

    def wt1(self, mu) -> Vector:
        """Image in Y of an element of Z[I]."""
        return tuple(int(v) for v in np.asarray(mu, dtype=np.int64) @ self._i1)

    def wt2(self, beta) -> Vector:
        """Image in X of an element of Z[I]."""
        return tuple(int(v) for v in np.asarray(beta, dtype=np.int64) @ self._i2)

    def k_exponent(self, mu, i: int) -> int:
        """<sum_k mu_k i1(k), i2(i)>, the exponent in K_mu E_i K_-mu = q^e E_i."""
        return int(np.asarray(mu, dtype=np.int64) @ self._cartan[:, i])

    def bilinear(self, mu, nu) -> int:
        """mu^T C nu = <i1(mu), i2(nu)>."""
        return int(np.asarray(mu, dtype=np.int64) @ self._cartan @ np.asarray(nu, dtype=np.int64))

    def dot_of(self, alpha, beta) -> int:
        """The symmetric form on Z[I]."""
        return sum(alpha[i] * beta[j] * self.dot[i][j]
                   for i in range(self.n) for j in range(self.n) if alpha[i] and beta[j])

    def y_regular(self) -> bool:
        if not self.n:
            return True
        divisors = elementary_divisors([list(row) for row in self.i1], self.rank_y)
        return sum(1 for d in divisors if d) == self.n

    def label(self) -> str:
        return self.name or f'datum[{",".join(self.names)}]'

    def check(self) -> ValidationReport:
        n = self.n
        problems_cartan = ''
        for i in range(n):
            for j in range(n):
                if self.dot[i][j] != self.dot[j][i]:
                    problems_cartan = f'dot is not symmetric at ({self.names[i]},{self.names[j]})'
                    break
            if problems_cartan:
                break
        if not problems_cartan:
            for i in range(n):
                d = self.dot[i][i]
                if d <= 0 or d % 2:
                    problems_cartan = f'dot({self.names[i]},{self.names[i]}) = {d} is not a positive even integer'
                    break
                for j in range(n):
                    if i != j and (2 * self.dot[i][j] % d or self.dot[i][j] > 0):
                        problems_cartan = (f'C[{self.names[i]}][{self.names[j]}] = 2*{self.dot[i][j]}/{d} '
                                           f'is not a non-positive integer')
                        break
                if problems_cartan:
                    break

        problems_embed = ''
        if not problems_cartan:
            for i in range(n):
                for j in range(n):
                    value = self.ip(self.i1[i], self.i2[j])
                    if value != self.cartan[i][j]:
                        problems_embed = (f'<i1({self.names[i]}), i2({self.names[j]})> = {value}, '
                                          f'expected C = {self.cartan[i][j]}')
                        break
                if problems_embed:
                    break

        divisors = elementary_divisors([list(row) for row in self.pairing], self.rank_x)
        perfect = self.rank_y == self.rank_x and len(divisors) == self.rank_y and all(d == 1 for d in divisors)
        return ValidationReport(self.label(), (
            ConditionResult('cartan', 'dot gives a generalised Cartan matrix', not problems_cartan, problems_cartan),
            ConditionResult('embeddings', 'pairing of i1 and i2 is the Cartan matrix',
                            not problems_cartan and not problems_embed, problems_embed or problems_cartan),
            ConditionResult('perfect', 'pairing Y x X -> Z is perfect', perfect,
                            '' if perfect else f'elementary divisors {divisors}'),
        ))

    def to_dict(self) -> dict:
        data = {
            'I': list(self.names),
            'dot': [list(r) for r in self.dot],
            'rankY': self.rank_y,
            'rankX': self.rank_x,
            'pairing': [list(r) for r in self.pairing],
            'i1': [list(r) for r in self.i1],
            'i2': [list(r) for r in self.i2],
        }
        if self.name:
            data['name'] = self.name
        return data


@dataclass(frozen=True)
class SubRootDatum:
    ambient: RootDatum
    sub: RootDatum
    iota: tuple[int, ...]
    sy: Matrix
    sx: Matrix
    xpp: Matrix | None = None
    name: str = field(default='', compare=False)

    def __post_init__(self):
        t, j = self.ambient, self.sub
        if len(self.iota) != j.n:
            raise InputError(f'iota has {len(self.iota)} entries but the sub datum has {j.n} indices')
        if any(not 0 <= i < t.n for i in self.iota):
            raise InputError(f'iota {self.iota} leaves the ambient index set of size {t.n}')
        for label, images, count, length in (('sY', self.sy, j.rank_y, t.rank_y),
                                             ('sX', self.sx, j.rank_x, t.rank_x)):
            if len(images) != count or any(len(v) != length for v in images):
                raise InputError(f'{label} must list {count} vectors of length {length}')
        if self.xpp is not None and any(len(v) != t.rank_x for v in self.xpp):
            raise InputError(f'Xpp vectors must have length {t.rank_x}')

    @cached_property
    def D(self) -> tuple[int, ...]:
        image = set(self.iota)
        return tuple(i for i in range(self.ambient.n) if i not in image)

    @cached_property
    def complement(self) -> Matrix:
        if self.xpp is not None:
            return self.xpp
        return complement_basis(self)

    def chi(self, alpha) -> int:
        """Number of letters of the word alpha that lie in D."""
        d = set(self.D)
        return sum(1 for letter in alpha if letter in d)

    def chi_of_degree(self, beta) -> int:
        return sum(beta[d] for d in self.D)

    def label(self) -> str:
        return self.name or f'{self.sub.label()} in {self.ambient.label()}'

    def split_k(self, mu) -> tuple[Vector, Vector]:
        """Z = Z' + Z'': the iota(J) part and the D part of mu."""
        inner = set(self.iota)
        return (tuple(v if i in inner else 0 for i, v in enumerate(mu)),
                tuple(0 if i in inner else v for i, v in enumerate(mu)))

    def rho(self, lam) -> Vector:
        return restriction_rho(self, lam)

    def to_dict(self) -> dict:
        data = {
            'ambient': self.ambient.to_dict(),
            'sub': self.sub.to_dict(),
            'iota': [self.ambient.names[i] for i in self.iota],
            'sY': [list(v) for v in self.sy],
            'sX': [list(v) for v in self.sx],
            'Xpp': [list(v) for v in self.complement],
        }
        if self.name:
            data['name'] = self.name
        return data


def complement_basis(s: SubRootDatum) -> Matrix:
    """X'' as the Z-kernel of x -> (<s_Y(y'_k), x>)_k, read off a Smith decomposition."""
    t = s.ambient
    rows = [[t.ip(y, [int(a == b) for b in range(t.rank_x)]) for a in range(t.rank_x)] for y in s.sy]
    basis = integer_kernel(rows, t.rank_x)
    logger.debug('Complement of s_X(X\') in X for %s: %s', s.label(), basis)
    return tuple(tuple(v) for v in basis)


def _vector_sum(images, coeffs, length: int) -> Vector:
    total = np.zeros(length, dtype=np.int64)
    for c, v in zip(coeffs, images):
        if c:
            total += c * np.asarray(v, dtype=np.int64)
    return tuple(int(x) for x in total)


def validate_sub_root_datum(s: SubRootDatum) -> ValidationReport:
    """Check the six conditions of a sub-root datum, with a witness for each failure."""
    t, j = s.ambient, s.sub
    results = []

    seen = {}
    witness = ''
    for a, i in enumerate(s.iota):
        if i in seen:
            witness = f'iota({j.names[seen[i]]}) = iota({j.names[a]}) = {t.names[i]}'
            break
        seen[i] = a
    results.append(ConditionResult('i', 'iota is injective', not witness, witness))

    witness = ''
    for a, b in itertools.product(range(j.n), repeat=2):
        if j.dot[a][b] != t.dot[s.iota[a]][s.iota[b]]:
            witness = (f"dot'({j.names[a]},{j.names[b]}) = {j.dot[a][b]} but "
                       f'dot({t.names[s.iota[a]]},{t.names[s.iota[b]]}) = {t.dot[s.iota[a]][s.iota[b]]}')
            break
    results.append(ConditionResult('ii', 'dot restricts to dot\'', not witness, witness))

    ok_y, div_y = is_saturated_injection(s.sy, t.rank_y)
    ok_x, div_x = is_saturated_injection(s.sx, t.rank_x)
    witness = '; '.join(w for w in (
        '' if ok_y else f's_Y elementary divisors {div_y}',
        '' if ok_x else f's_X elementary divisors {div_x}') if w)
    results.append(ConditionResult('iii', 's_Y, s_X injective with free quotients', ok_y and ok_x, witness))

    witness = ''
    for a, b in itertools.product(range(j.rank_y), range(j.rank_x)):
        value = t.ip(s.sy[a], s.sx[b])
        if value != j.pairing[a][b]:
            witness = f"<s_Y(y'_{a}), s_X(x'_{b})> = {value} but <y'_{a}, x'_{b}>' = {j.pairing[a][b]}"
            break
    results.append(ConditionResult('iv', 'pairing restricts to the sub pairing', not witness, witness))

    xpp = s.complement
    witness = ''
    if len(s.sx) + len(xpp) != t.rank_x:
        witness = f'rank X\' + rank X\'\' = {len(s.sx) + len(xpp)}, expected {t.rank_x}'
    elif abs(int_det([[int(v[r]) for v in (*s.sx, *xpp)] for r in range(t.rank_x)])) != 1:
        witness = 's_X(X\') and X\'\' do not span X over Z'
    else:
        for a, k in itertools.product(range(j.rank_y), range(len(xpp))):
            value = t.ip(s.sy[a], xpp[k])
            if value:
                witness = f"<s_Y(y'_{a}), x''_{k}> = {value} for x''_{k} = {list(xpp[k])}"
                break
    results.append(ConditionResult('v', 'X = X\' + X\'\' with s_Y(Y\') orthogonal to X\'\'', not witness, witness))

    witness = ''
    for a in range(j.n):
        lhs = _vector_sum(s.sy, j.i1[a], t.rank_y)
        if lhs != tuple(t.i1[s.iota[a]]):
            witness = f's_Y(i1\'({j.names[a]})) = {list(lhs)} but i1({t.names[s.iota[a]]}) = {list(t.i1[s.iota[a]])}'
            break
        lhs = _vector_sum(s.sx, j.i2[a], t.rank_x)
        if lhs != tuple(t.i2[s.iota[a]]):
            witness = f's_X(i2\'({j.names[a]})) = {list(lhs)} but i2({t.names[s.iota[a]]}) = {list(t.i2[s.iota[a]])}'
            break
    results.append(ConditionResult('vi', 's_Y i1\' = i1 iota and s_X i2\' = i2 iota', not witness, witness))

    report = ValidationReport(s.label(), tuple(results))
    logger.debug('Validation of %s: failed %s', s.label(), report.failed or 'none')
    return report


def restriction_rho(s: SubRootDatum, lam) -> Vector:
    """rho: X -> X', the projection along the fixed splitting X = X' + X''."""
    t = s.ambient
    columns = (*s.sx, *s.complement)
    if len(columns) != t.rank_x:
        raise InputError(f'{s.label()}: X\' and X\'\' do not form a basis of X')
    coords = solve_unimodular(columns, lam)
    if coords is None:
        raise InputError(f'{s.label()}: {list(lam)} has no integral decomposition along X = X\' + X\'\'')
    return tuple(coords[:s.sub.rank_x])


def is_dominant(d: RootDatum, lam, S) -> bool:
    """Whether <i1(s), lam> is a natural number for every s in S."""
    S = list(S)
    if S:
        divisors = elementary_divisors([list(d.i1[s]) for s in S], d.rank_y)
        if sum(1 for v in divisors if v) != len(S):
            raise InputError(f'i1 images of {[d.names[s] for s in S]} are linearly dependent')
    return all(d.ip(d.i1[s], lam) >= 0 for s in S)


def chi_grading(s: SubRootDatum, alpha) -> int:
    return s.chi(alpha)


def _cartan_a(n: int) -> list[list[int]]:
    return [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)] for i in range(n)]


def builtin_datum(kind: str, n: int, form: str = 'sc') -> RootDatum:
    """Type A_n data: simply connected ('sc') or GL_{n+1} ('gl')."""
    if kind.upper() != 'A':
        raise InputError(f'Unsupported builtin type {kind!r}; only A is bundled')
    if n < 1:
        raise InputError(f'Builtin rank must be at least 1, got {n}')
    cartan = _cartan_a(n)
    names = tuple(str(i + 1) for i in range(n))
    if form == 'sc':
        identity = [[int(i == j) for j in range(n)] for i in range(n)]
        return RootDatum(names, tuple(map(tuple, cartan)), n, n, tuple(map(tuple, identity)),
                         tuple(map(tuple, identity)),
                         tuple(tuple(cartan[k][j] for k in range(n)) for j in range(n)),
                         name=f'A{n}')
    if form == 'gl':
        m = n + 1
        identity = [[int(i == j) for j in range(m)] for i in range(m)]
        roots = tuple(tuple(int(k == i) - int(k == i + 1) for k in range(m)) for i in range(n))
        return RootDatum(names, tuple(map(tuple, cartan)), m, m, tuple(map(tuple, identity)),
                         roots, roots, name=f'A{n}:gl')
    raise InputError(f'Unsupported builtin form {form!r}; use sc or gl')


def parse_builtin(ref: str) -> RootDatum:
    """'builtin:A3' or 'builtin:A3:gl'."""
    parts = ref.split(':')
    if len(parts) not in (2, 3) or parts[0] != 'builtin' or len(parts[1]) < 2:
        raise InputError(f'Malformed builtin reference {ref!r}')
    try:
        n = int(parts[1][1:])
    except ValueError as e:
        raise InputError(f'Malformed builtin reference {ref!r}: {e}') from e
    return builtin_datum(parts[1][0], n, parts[2] if len(parts) == 3 else 'sc')


def standard_embedding(t: RootDatum, j: RootDatum, iota) -> SubRootDatum:
    """Coordinate embedding of a gl block datum at consecutive ambient positions."""
    iota = tuple(iota)
    if not iota:
        raise InputError('standard_embedding needs a nonempty iota')
    start = iota[0]
    if iota != tuple(range(start, start + len(iota))) or j.rank_y != len(iota) + 1 or j.rank_x != j.rank_y:
        raise InputError('standard_embedding supports consecutive gl blocks only')
    if start + j.rank_y > t.rank_y or t.rank_x != t.rank_y:
        raise InputError('standard_embedding: block does not fit the ambient lattice')
    images = tuple(tuple(int(r == start + k) for r in range(t.rank_y)) for k in range(j.rank_y))
    return SubRootDatum(t, j, iota, images, images, name=f'{j.label()} in {t.label()}')


def empty_sub_datum(t: RootDatum) -> SubRootDatum:
    """J = {} with zero lattices; every index of t is deleted."""
    empty = RootDatum((), (), 0, 0, (), (), (), name='empty')
    return SubRootDatum(t, empty, (), (), (), name=f'empty in {t.label()}')


def candidate_embeddings(t: RootDatum, j: RootDatum) -> list[tuple[int, ...]]:
    """Injective iota: J -> I along which dot restricts to dot'."""
    found = []
    for iota in itertools.permutations(range(t.n), j.n):
        if all(j.dot[a][b] == t.dot[iota[a]][iota[b]] for a in range(j.n) for b in range(j.n)):
            found.append(iota)
    return found


def _block(a: Matrix, b: Matrix, rows_a: int, cols_a: int, rows_b: int, cols_b: int) -> Matrix:
    top = tuple(tuple(row) + (0,) * cols_b for row in a)
    bottom = tuple((0,) * cols_a + tuple(row) for row in b)
    return top + bottom


def direct_sum(t: RootDatum, j: RootDatum) -> RootDatum:
    """Block-diagonal sum; colliding names of j are primed."""
    names = list(t.names)
    for name in j.names:
        while name in names:
            name = f"{name}'"
        names.append(name)
    return RootDatum(
        tuple(names),
        _block(t.dot, j.dot, t.n, t.n, j.n, j.n),
        t.rank_y + j.rank_y,
        t.rank_x + j.rank_x,
        _block(t.pairing, j.pairing, t.rank_y, t.rank_x, j.rank_y, j.rank_x),
        tuple(tuple(v) + (0,) * j.rank_y for v in t.i1) + tuple((0,) * t.rank_y + tuple(v) for v in j.i1),
        tuple(tuple(v) + (0,) * j.rank_x for v in t.i2) + tuple((0,) * t.rank_x + tuple(v) for v in j.i2),
        name=f'{t.label()}+{j.label()}',
    )


def direct_sum_inclusions(t: RootDatum, j: RootDatum) -> tuple[SubRootDatum, SubRootDatum]:
    """Both summands as sub-root data of the direct sum."""
    total = direct_sum(t, j)

    def unit(k: int, size: int) -> Vector:
        return tuple(int(r == k) for r in range(size))

    first = SubRootDatum(
        total, t, tuple(range(t.n)),
        tuple(unit(k, total.rank_y) for k in range(t.rank_y)),
        tuple(unit(k, total.rank_x) for k in range(t.rank_x)),
        tuple(unit(t.rank_x + k, total.rank_x) for k in range(j.rank_x)),
        name=f'{t.label()} in {total.label()}',
    )
    second = SubRootDatum(
        total, j, tuple(range(t.n, total.n)),
        tuple(unit(t.rank_y + k, total.rank_y) for k in range(j.rank_y)),
        tuple(unit(t.rank_x + k, total.rank_x) for k in range(j.rank_x)),
        tuple(unit(k, total.rank_x) for k in range(t.rank_x)),
        name=f'{j.label()} in {total.label()}',
    )
    return first, second


def datum_from_dict(data: dict, path: Path | str = '') -> RootDatum:
    check_fields(data, DATUM_REQUIRED, DATUM_OPTIONAL, path)
    names = data['I']
    if not isinstance(names, list) or any(not isinstance(x, str) for x in names):
        raise DatumFormatError('I must be a list of strings', path=str(path), location='I')
    if len(set(names)) != len(names):
        raise DatumFormatError('I has repeated names', path=str(path), location='I')
    for key in ('rankY', 'rankX'):
        if isinstance(data[key], bool) or not isinstance(data[key], int) or data[key] < 0:
            raise DatumFormatError(f'{key} must be a non-negative integer', path=str(path), location=key)
    n, ry, rx = len(names), data['rankY'], data['rankX']
    name = data.get('name', '')
    if not isinstance(name, str):
        raise DatumFormatError('name must be a string', path=str(path), location='name')
    return RootDatum(
        tuple(names),
        int_rows(data['dot'], n, n, path, 'dot'),
        ry, rx,
        int_rows(data['pairing'], ry, rx, path, 'pairing'),
        int_rows(data['i1'], n, ry, path, 'i1'),
        int_rows(data['i2'], n, rx, path, 'i2'),
        name=name or (Path(path).stem if path else ''),
    )


def load_datum(path: Path) -> RootDatum:
    return datum_from_dict(read_json(path), path)


def resolve_datum(ref, base: Path) -> RootDatum:
    if isinstance(ref, dict):
        return datum_from_dict(ref, base)
    if not isinstance(ref, str):
        raise DatumFormatError('Datum reference must be a path, a builtin name or an inline object')
    if ref.startswith('builtin:'):
        return parse_builtin(ref)
    return load_datum(base / ref)


def sub_datum_from_dict(data: dict, path: Path | str = '') -> SubRootDatum:
    check_fields(data, SUB_REQUIRED, SUB_OPTIONAL, path)
    base = Path(path).parent if path else Path.cwd()
    ambient = resolve_datum(data['ambient'], base)
    sub = resolve_datum(data['sub'], base)

    iota_names = data['iota']
    if not isinstance(iota_names, list) or any(not isinstance(x, str) for x in iota_names):
        raise DatumFormatError('iota must be a list of ambient index names', path=str(path), location='iota')
    if len(iota_names) != sub.n:
        raise DatumFormatError(f'iota has {len(iota_names)} entries, sub datum has {sub.n} indices',
                               path=str(path), location='iota')
    iota = []
    for k, name in enumerate(iota_names):
        if name not in ambient.names:
            raise DatumFormatError(f'iota names unknown ambient index {name!r}',
                                   path=str(path), location=f'iota[{k}]')
        iota.append(ambient.names.index(name))

    sy = int_rows(data['sY'], sub.rank_y, ambient.rank_y, path, 'sY')
    sx = int_rows(data['sX'], sub.rank_x, ambient.rank_x, path, 'sX')
    xpp = None
    if 'Xpp' in data:
        if not isinstance(data['Xpp'], list):
            raise DatumFormatError('Xpp must be a list of vectors', path=str(path), location='Xpp')
        xpp = tuple(int_vector(v, ambient.rank_x, path, f'Xpp[{k}]') for k, v in enumerate(data['Xpp']))
    name = data.get('name', '')
    return SubRootDatum(ambient, sub, tuple(iota), sy, sx, xpp,
                        name=name or (Path(path).stem if path else ''))


def load_sub_datum(path: Path) -> SubRootDatum:
    return sub_datum_from_dict(read_json(path), path)


def load_any(path: Path) -> RootDatum | SubRootDatum:
    data = read_json(path)
    if isinstance(data, dict) and 'ambient' in data:
        return sub_datum_from_dict(data, path)
    return datum_from_dict(data, path)


def validate_any(obj: RootDatum | SubRootDatum) -> list[ValidationReport]:
    if isinstance(obj, SubRootDatum):
        return [obj.ambient.check(), obj.sub.check(), validate_sub_root_datum(obj)]
    return [obj.check()]
