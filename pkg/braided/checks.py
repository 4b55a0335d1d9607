"""
Certificates on B: the Nichols property up to a degree, the structure of the
degree-0 part H_0 = U_q^<=0(J) x| k[Z/Z'] and the embedding U_q(J) -> U_q(T).
"""
import logging

from dataclasses import dataclass, field

from exceptions import ConsistencyError
from linalg import LinearSpan
from qfield import qpow
from uqalgebra import UElement, format_element, iota_map
from uqalgebra.halves import HalfAlgebra
from uqalgebra.quantumgroup import compositions
from braided.degrees import BraidedHopfAlgebra
from braided.structure import primitives_at_degree


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckItem:
    name: str
    passed: bool
    witness: str = ''


@dataclass
class CheckReport:
    title: str
    items: list[CheckItem] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items)

    @property
    def failed(self) -> list[CheckItem]:
        return [item for item in self.items if not item.passed]

    def add(self, name: str, passed: bool, witness: str = '') -> None:
        self.items.append(CheckItem(name, passed, '' if passed else witness))

    def to_dict(self) -> dict:
        return {
            'title': self.title,
            'passed': self.passed,
            'items': [{'name': i.name, 'passed': i.passed, 'witness': i.witness} for i in self.items],
        }


def _combination(engine: BraidedHopfAlgebra, n: int, coeffs) -> str:
    basis = engine.compute_Bn(n)
    total = engine.algebra.zero()
    for c, value in zip(coeffs, basis.elements):
        total = total + value.scale(c)
    return format_element(total)


def _outside_products(engine: BraidedHopfAlgebra, n: int) -> str:
    """A coinvariant of degree n that is not in span(B_{n-1} B_1), formatted; '' when there is none."""
    algebra = engine.algebra
    products = LinearSpan()
    for left in engine.compute_Bn(n - 1).elements:
        for right in engine.compute_B1().elements:
            products.add(algebra.multiply(left, right).terms)
    for vector in engine.coinvariants(n).basis:
        if not products.contains(vector):
            return format_element(UElement(algebra, vector))
    return ''


def nichols_check(engine: BraidedHopfAlgebra, N: int) -> CheckReport:
    """B_0 = k, no braided primitives in degrees 2..N and B_n generated by B_1."""
    report = CheckReport(f'Nichols property up to degree {N}')
    algebra = engine.algebra
    projection = engine.projection
    inner = sorted(set(engine.s.iota))

    stray = ''
    for length in range(3):
        for beta in compositions(length, len(inner)):
            degree = [0] * algebra.n
            for j, v in zip(inner, beta):
                degree[j] = v
            for word in algebra.half.basis(tuple(degree)):
                image = projection.Pi(algebra.monomial(word))
                if any(f or e for f, _, e in image.terms):
                    stray = stray or format_element(image)
    report.add('B_0 = k', len(engine.compute_Bn(0)) == 1 and not stray, stray)

    for n in range(1, N + 1):
        try:
            basis = engine.compute_Bn(n)
        except ConsistencyError as e:
            report.add(f'B_{n} generated by B_1', False, str(e))
            continue
        if n < 2:
            continue
        outside = _outside_products(engine, n)
        report.add(f'B_{n} generated by B_1', not outside, f'{outside} is not a sum of products')
        primitives = primitives_at_degree(engine, n)
        witness = _combination(engine, n, primitives.combinations[0]) if primitives.dimension else ''
        report.add(f'no primitives in B_{n} (dim {len(basis)})', not primitives.dimension, witness)
    logger.info('Nichols check up to degree %d: %s', N, 'passed' if report.passed else 'FAILED')
    return report


def embedding_relations_check(engine: BraidedHopfAlgebra) -> CheckReport:
    s = engine.s
    embedding = iota_map(s, engine.max_degree, target=engine.algebra)
    report = CheckReport(f'Relations of U_q({s.sub.label()}) inside U_q({s.ambient.label()})')
    for check in embedding.check_relations():
        report.add(check.name, check.passed, check.residual)
    return report


def verify_zero_component(engine: BraidedHopfAlgebra, length: int = 3) -> CheckReport:
    """Semidirect action of K_{e_d} on F_j, slice dimensions of H_0 and the iota relations."""
    s = engine.s
    algebra = engine.algebra
    report = CheckReport('Degree-0 component')
    names = s.ambient.names
    inner = sorted(set(s.iota))

    for d in s.D:
        conj_left, conj_right = algebra.K(algebra.unit_mu(d)), algebra.K(algebra.unit_mu(d, -1))
        for j in inner:
            lhs = algebra.multiply(algebra.multiply(conj_left, algebra.F(j)), conj_right)
            expected = algebra.F(j).scale(qpow(-s.ambient.bilinear(algebra.unit_mu(d), algebra.unit_mu(j))))
            residual = lhs - expected
            report.add(f'K[{names[d]}] F[{names[j]}] K[{names[d]}]^-1', residual.is_zero(), format_element(residual))

    sub_half = HalfAlgebra(s.sub)
    for total in range(1, length + 1):
        for beta in compositions(total, s.sub.n):
            degree = [0] * algebra.n
            for a, v in enumerate(beta):
                degree[s.iota[a]] += v
            ambient_dim = algebra.half.dimension(tuple(degree))
            sub_dim = sub_half.dimension(beta)
            report.add(f'dim f{list(beta)} of J = dim of its image', ambient_dim == sub_dim,
                       f'{sub_dim} in J, {ambient_dim} in T')

    report.items.extend(embedding_relations_check(engine).items)
    logger.info('Degree-0 component checks: %d, failed %d', len(report.items), len(report.failed))
    return report
