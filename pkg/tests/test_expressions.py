import pytest

from exceptions import DatumFormatError
from qfield import q, qpow
from rootdata import builtin_datum
from uqalgebra import QuantumGroup, format_element, parse_element


@pytest.fixture(scope='module')
def a2():
    return QuantumGroup(builtin_datum('A', 2, 'gl'), max_degree=4)


def test_format_of_simple_elements(a2):
    assert format_element(a2.zero()) == '0'
    assert format_element(a2.one()) == '1'
    assert format_element(a2.F(0)) == 'F[1]'
    x = a2.multiply(a2.F(1), a2.K((0, 1))).scale(-q)
    assert format_element(x) == '-(q)*F[2]*K[0,1]'


@pytest.mark.parametrize('text', [
    'F[1]*F[2] - q*F[2]*F[1]',
    '(q**2 - 1)/q*F[1]*K[1,-1]*E[2] - F[2]',
    'E[1]*F[1] + 3/2',
    'K[2,1]*K[-2,-1]',
])
def test_parse_and_format_agree(a2, text):
    x = parse_element(text, a2)
    assert parse_element(format_element(x), a2) == x
    assert format_element(parse_element(format_element(x), a2)) == format_element(x)


def test_parse_respects_relations(a2):
    assert parse_element('K[1,0]*E[1]', a2) == a2.multiply(a2.E(0), a2.K((1, 0))).scale(qpow(2))
    assert parse_element('K[2,1]*K[-2,-1]', a2) == a2.one()
    assert parse_element('F[1]**2*F[2]', a2) == a2.monomial((0, 0, 1))
    assert parse_element('K[1,0]**-1', a2) == a2.K((-1, 0))


@pytest.mark.parametrize('text', [
    'F[7]',
    'K[1,0,0]',
    'K[a,0]',
    'x*F[1]',
    'F[1]**-1',
    'F[1] +* E[2]',
])
def test_parse_errors(a2, text):
    with pytest.raises(DatumFormatError):
        parse_element(text, a2)
