import json

import pytest

from braided import BraidedHopfAlgebra
from exceptions import DegreeBoundError, OrbitCapError
from qfield import parse_ratq
from rootdata import builtin_datum, direct_sum_inclusions, load_sub_datum
from uqalgebra import format_element, parse_element


@pytest.fixture(scope='module')
def golden(fixtures):
    return json.loads((fixtures / 'a3_a2_golden.json').read_text(encoding='utf-8'))


def _generator(engine, label):
    return next(g for g in engine.generators if g.label == label)


def _b1(engine, golden):
    return {label: parse_element(text, engine.algebra) for label, text in golden['b1'].items()}


def test_b1_matches_golden_basis(a3_a2, golden):
    b1 = a3_a2.compute_B1()
    expected = _b1(a3_a2, golden)
    assert b1.labels == list(expected)
    for label, value in zip(b1.labels, b1.elements):
        assert value == expected[label], format_element(value)
    assert b1.origins[0] == 'F[3]H[3]'


def test_b1_vectors_are_coinvariant_with_weights(a3_a2):
    b1 = a3_a2.compute_B1()
    for vector in b1.vectors:
        assert vector.degree == 1
        assert a3_a2.projection.is_coinvariant(vector.value)
    assert [v.weight for v in b1.vectors] == [(0, 0, -1), (0, -1, -1), (-1, -1, -1)]


def test_k_eigenvalues(a3_a2, golden):
    basis = _b1(a3_a2, golden)
    for label, eigenvalues in golden['k_eigenvalues'].items():
        g = _generator(a3_a2, label)
        for (name, value), text in zip(basis.items(), eigenvalues):
            assert a3_a2.act(g, value) == value.scale(parse_ratq(text)), (label, name)


def test_adjoint_images(a3_a2, golden):
    basis = _b1(a3_a2, golden)
    for entry in golden['adjoint']:
        g = _generator(a3_a2, entry['generator'])
        assert a3_a2.act(g, basis[entry['source']]) == basis[entry['image']]
    for label, name in golden['zero_actions']:
        assert a3_a2.act(_generator(a3_a2, label), basis[name]).is_zero(), (label, name)


def test_hilbert_series_and_certificates(a3_a2, golden):
    assert a3_a2.hilbert_series(golden['max_degree']) == golden['hilbert']
    for n in range(1, golden['max_degree'] + 1):
        certificate = a3_a2.certificates[n]
        assert certificate.agree
        assert certificate.products_dim == golden['hilbert'][n]
        assert certificate.projected_words >= certificate.projection_dim
    assert a3_a2.certificates[2].window == (2, 2, 0)


def test_products_are_expressed_in_the_basis(a3_a2):
    b1 = a3_a2.compute_B1()
    product = a3_a2.algebra.multiply(b1.elements[0], b1.elements[2])
    coefficients = a3_a2.basis_coefficients(product, 2)
    b2 = a3_a2.compute_Bn(2)
    total = a3_a2.algebra.zero()
    for k, c in coefficients.items():
        total = total + b2.elements[k].scale(c)
    assert total == product


@pytest.mark.parametrize('name, index, corank', [
    ('a2_in_a3.json', 3, 1),
    ('identity_a3.json', 0, 0),
    ('a1_in_a1a1.json', 1, 1),
    ('a1a1_in_a3.json', 4, 1),
])
def test_index_and_corank(fixtures, name, index, corank):
    engine = BraidedHopfAlgebra(load_sub_datum(fixtures / name), max_degree=2)
    report = engine.index_and_corank()
    assert (report.index, report.corank) == (index, corank)
    assert not report.capped


def test_deleted_nodes(fixtures):
    assert load_sub_datum(fixtures / 'a1a1_in_a3.json').D == (1,)
    assert load_sub_datum(fixtures / 'a2_in_a3.json').D == (2,)


def test_identity_gives_the_trivial_algebra(fixtures):
    engine = BraidedHopfAlgebra(load_sub_datum(fixtures / 'identity_a3.json'), max_degree=3)
    assert engine.hilbert_series(3) == [1, 0, 0, 0]


def test_empty_sub_datum_over_a1(empty_a1):
    assert empty_a1.hilbert_series(3) == [1, 1, 1, 1]
    assert empty_a1.compute_B1().elements[0] == empty_a1.seed(0)


def test_empty_sub_datum_over_a2(empty_a2):
    assert empty_a2.hilbert_series(3) == [1, 2, 4, 6]


@pytest.mark.parametrize('rank', [1, 2])
def test_direct_sum_summand(rank):
    first, _ = direct_sum_inclusions(builtin_datum('A', rank, 'gl'), builtin_datum('A', 1, 'gl'))
    engine = BraidedHopfAlgebra(first, max_degree=3)
    assert engine.hilbert_series(3) == [1, 1, 1, 1]
    assert engine.index_and_corank().index == 1


def test_affine_orbit_cap(fixtures):
    s = load_sub_datum(fixtures / 'a1_in_affine_a1.json')
    assert len(BraidedHopfAlgebra(s, max_degree=1).compute_B1()) == 3
    capped = BraidedHopfAlgebra(s, max_degree=1, orbit_cap=2)
    with pytest.raises(OrbitCapError) as info:
        capped.compute_B1()
    assert info.value.cap == 2
    assert len(info.value.partial) == 3
    assert capped.index_and_corank().capped


def test_degree_bound(fixtures):
    engine = BraidedHopfAlgebra(load_sub_datum(fixtures / 'a2_in_a3.json'), max_degree=1)
    assert engine.hilbert_series(1) == [1, 3]
    with pytest.raises(DegreeBoundError) as info:
        engine.compute_Bn(2)
    assert info.value.bound == 1


def test_highest_weights_and_module_generators(a3_a2):
    (hw,) = a3_a2.highest_weights()
    assert hw.d == 2
    assert hw.dimension == 3
    assert hw.primitive
    assert hw.dominant
    generators = a3_a2.module_generators(2)
    assert [g.word for g in generators] == [(), (2,), (2, 2)]
    assert all(g.coinvariant and g.primitive for g in generators)
