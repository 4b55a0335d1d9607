import pytest

from exceptions import InputError
from qfield import ONE, qpow
from uqalgebra import Tensor, UElement


def _unit(engine, term):
    return UElement(engine.algebra, {term: ONE})


@pytest.fixture(scope='module')
def borel(a3_a2):
    algebra = a3_a2.algebra
    return [
        algebra.monomial((2, 1, 0)),
        algebra.monomial((0, 2), (1, 0, -1)),
        algebra.monomial((1, 2, 2), (0, 1, 0)) + algebra.F(0),
        algebra.K((0, 2, 1)),
    ]


def test_pi0_keeps_inner_letters(a3_a2):
    algebra = a3_a2.algebra
    x = algebra.monomial((0, 1)) + algebra.monomial((2,), (0, 0, 1))
    assert a3_a2.projection.pi0(x) == algebra.monomial((0, 1))


def test_pi_is_an_idempotent_onto_coinvariants(a3_a2, borel):
    projection = a3_a2.projection
    for h in borel:
        image = projection.Pi(h)
        assert projection.is_coinvariant(image)
        assert projection.Pi(image) == image


def test_pi_fixes_b1(a3_a2):
    for b in a3_a2.compute_B1().elements:
        assert a3_a2.projection.Pi(b) == b


def test_pi_rejects_e_letters(a3_a2):
    with pytest.raises(InputError):
        a3_a2.projection.Pi(a3_a2.algebra.E(0))


def test_upsilon_is_inverted_by_multiplication(a3_a2, borel):
    projection = a3_a2.projection
    for h in borel:
        assert projection.upsilon_inverse(projection.upsilon(h)) == h


def test_upsilon_is_multiplicative(a3_a2):
    algebra, projection = a3_a2.algebra, a3_a2.projection
    x, y = algebra.monomial((2,)), algebra.multiply(algebra.F(0), algebra.K((0, 1, 0)))
    product = projection.bosonisation_product(projection.upsilon(x), projection.upsilon(y))
    assert projection.upsilon(algebra.multiply(x, y)) == product


def test_braided_counit_and_antipode(a3_a2):
    algebra, projection = a3_a2.algebra, a3_a2.projection
    assert projection.braided_counit(algebra.one()) == ONE
    for b in a3_a2.compute_B1().elements + a3_a2.compute_Bn(2).elements:
        assert not projection.braided_counit(b)
        coproduct = projection.braided_coproduct(b)
        left = coproduct.contract(lambda key: {key[1]: algebra.counit_term(key[0])})
        assert left == b
        antipode = coproduct.contract(
            lambda key: algebra.multiply(projection.braided_antipode(_unit(a3_a2, key[0])),
                                         _unit(a3_a2, key[1])).terms)
        assert antipode.is_zero()


def test_b1_is_braided_primitive(a3_a2):
    one = a3_a2.algebra.one()
    for b in a3_a2.compute_B1().elements:
        expected = Tensor.of(b, one) + Tensor.of(one, b)
        assert a3_a2.projection.braided_coproduct(b) == expected


def test_braid_without_sub_datum_is_a_scaled_flip(empty_a1):
    (b,) = empty_a1.compute_B1().elements
    assert empty_a1.projection.braid(b, b) == Tensor.of(b, b).scale(qpow(-2))
