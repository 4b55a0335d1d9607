import itertools

import pytest

from exceptions import DegreeBoundError, InputError
from qfield import ONE, q, qi_bracket, qpow, ratq_inv
from rootdata import RootDatum, builtin_datum, standard_embedding
from uqalgebra import HalfAlgebra, QuantumGroup, Tensor, iota_map


@pytest.fixture(scope='module')
def a2():
    return QuantumGroup(builtin_datum('A', 2, 'gl'), max_degree=4)


@pytest.fixture(scope='module')
def a3():
    return QuantumGroup(builtin_datum('A', 3, 'gl'), max_degree=4)


def test_half_algebra_dimensions():
    half = HalfAlgebra(builtin_datum('A', 2, 'gl'))
    assert half.dimension((1, 0)) == 1
    assert half.dimension((1, 1)) == 2
    assert half.dimension((2, 1)) == 2
    assert half.dimension((3, 0)) == 1
    assert half.dimension((2, 2)) == 3
    a1 = HalfAlgebra(builtin_datum('A', 1))
    assert [a1.dimension((n,)) for n in range(5)] == [1, 1, 1, 1, 1]


def test_normal_words_reduce_to_themselves():
    half = HalfAlgebra(builtin_datum('A', 3, 'gl'))
    for word in half.basis((1, 1, 1)):
        assert half.is_normal(word)
        assert half.reduce_word(word) == {word: ONE}


@pytest.mark.parametrize('side', ['F', 'E'])
def test_serre_relations_vanish(a3, side):
    for i, j in itertools.permutations(range(3), 2):
        assert a3.serre_relation(i, j, side).is_zero()


def test_defining_relations(a2):
    for i, j in itertools.product(range(2), repeat=2):
        k, k_inv = a2.K(a2.unit_mu(i)), a2.K(a2.unit_mu(i, -1))
        conj_e = a2.multiply(a2.multiply(k, a2.E(j)), k_inv)
        conj_f = a2.multiply(a2.multiply(k, a2.F(j)), k_inv)
        assert conj_e == a2.E(j).scale(qpow(a2.datum.cartan[i][j]))
        assert conj_f == a2.F(j).scale(qpow(-a2.datum.cartan[i][j]))
        commutator = a2.commutator(a2.E(i), a2.F(j))
        if i == j:
            assert commutator == (a2.H(i) - a2.H(i, -1)).scale(qi_bracket(1))
        else:
            assert commutator.is_zero()


def test_k_group_law(a2):
    product = a2.multiply(a2.K((1, -2)), a2.K((-1, 3)))
    assert product == a2.K((0, 1))
    assert a2.multiply(a2.K((2, 1)), a2.K((-2, -1))) == a2.one()


def test_hopf_structure_on_generators(a2):
    f, e, h = a2.F(0), a2.E(0), a2.H(0)
    one = a2.one()
    assert a2.coproduct(f) == Tensor.of(f, a2.H(0, -1)) + Tensor.of(one, f)
    assert a2.coproduct(e) == Tensor.of(e, one) + Tensor.of(h, e)
    assert a2.antipode(f) == a2.multiply(f, h).scale(-1)
    assert a2.antipode(e) == a2.multiply(a2.H(0, -1), e).scale(-1)
    assert a2.antipode(a2.K((1, 2))) == a2.K((-1, -2))
    assert a2.counit(f + one.scale(q)) == q


def test_coproduct_is_multiplicative(a2):
    x = a2.F(0) + a2.multiply(a2.E(1), a2.K((1, 0)))
    y = a2.multiply(a2.F(1), a2.E(0)) - a2.F(0)
    assert a2.coproduct(a2.multiply(x, y)) == a2.coproduct(x) * a2.coproduct(y)
    assert a2.antipode(a2.multiply(x, y)) == a2.multiply(a2.antipode(y), a2.antipode(x))


def test_leg_filters_project_the_coproduct(a3):
    x = a3.monomial((0, 2, 1), (0, 1, 0))
    inner = frozenset({0, 1})
    full = a3.coproduct(x)
    kept = {key: c for key, c in full.terms.items() if all(letter in inner for letter in key[1][0] + key[1][2])}
    assert a3.coproduct(x, right=inner) == Tensor(a3, kept, 2)


@pytest.mark.parametrize('j', range(3))
def test_adjoint_shortcuts_match_general_formula(a3, j):
    v = a3.monomial((2, 1), a3.h_mu((0, 1, 1)))
    assert a3.ad_F(j, v) == a3.adjoint(a3.F(j), v)
    assert a3.ad_E(j, v) == a3.adjoint(a3.E(j), v)
    assert a3.ad_K(a3.unit_mu(j), v) == a3.adjoint(a3.K(a3.unit_mu(j)), v)


def test_pairing_on_generators(a3):
    for i, j in itertools.product(range(3), repeat=2):
        expected = -qi_bracket(1) if i == j else 0
        assert a3.pairing(a3.F(i), a3.F(j)) == expected
        ki, kj = a3.K(a3.unit_mu(i)), a3.K(a3.unit_mu(j))
        assert a3.pairing(ki, kj) == qpow(a3.datum.cartan[i][j])
    with pytest.raises(InputError):
        a3.pairing(a3.E(0), a3.F(0))


def test_pairing_of_degree_two_words(a2):
    f01 = a2.monomial((0, 1))
    f10 = a2.monomial((1, 0))
    assert a2.pairing(f01, a2.monomial((0, 0))) == 0
    c = qi_bracket(1) ** 2
    assert a2.pairing(f01, f01) == c
    assert a2.pairing(f01, f10) == c * ratq_inv(q)


def test_degree_bound(a2):
    small = QuantumGroup(a2.datum, max_degree=1)
    with pytest.raises(DegreeBoundError):
        small.multiply(small.F(0), small.F(1))
    graded = QuantumGroup(a2.datum, grading={1}, max_degree=1)
    assert graded.degree(((0, 0, 1), (0, 0), ())) == 1
    assert not graded.multiply(graded.F(0), graded.F(0)).is_zero()


def test_y_regularity_is_required():
    datum = RootDatum(('0', '1'), ((2, -2), (-2, 2)), 1, 1, ((1,),), ((1,), (-1,)), ((2,), (-2,)))
    assert not datum.y_regular()
    with pytest.raises(InputError):
        QuantumGroup(datum)


def test_embedding_respects_relations():
    s = standard_embedding(builtin_datum('A', 3, 'gl'), builtin_datum('A', 2, 'gl'), (1, 2))
    embedding = iota_map(s, max_degree=3)
    checks = embedding.check_relations()
    assert checks and all(c.passed for c in checks)
    image = embedding(embedding.source.F(0))
    assert image == embedding.target.F(1)


def test_borel_basis_and_weights(a2):
    terms = a2.borel_basis(2, 2)
    assert len(terms) == 4
    assert a2.weight(a2.monomial((0, 1))) == a2.datum.wt2((-1, -1))
    assert a2.weight(a2.F(0) + a2.F(1)) is None


def test_skew_derivation_on_normal_words():
    half = HalfAlgebra(builtin_datum('A', 2, 'gl'))
    for word in half.basis((2, 1)):
        for k in range(2):
            assert half.rbar(k, {word: ONE}) == half.reduce(half.word_rbar(k, word))
