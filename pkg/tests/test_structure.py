import itertools
import json

import pytest

from braided import (action_table, braid_equation_holds, braiding_matrix, hecke_detector, integrability_check,
                     is_invertible, pairing_rank, primitives_at_degree, relations_at_degree)
from qfield import ONE, parse_ratq, q


@pytest.fixture(scope='module')
def golden(fixtures):
    return json.loads((fixtures / 'a3_a2_golden.json').read_text(encoding='utf-8'))


@pytest.fixture(scope='module')
def braiding(a3_a2):
    return braiding_matrix(a3_a2)


def test_action_table(a3_a2):
    table = action_table(a3_a2, a3_a2.compute_B1())
    assert table.labels == ['b1', 'b2', 'b3']
    assert table.image('F[2]', 0) == {1: ONE}
    assert table.image('F[1]', 1) == {2: ONE}
    assert table.image('F[1]', 0) == {}
    assert table.image('K[3]', 0) == {0: parse_ratq('q**-2')}
    assert table.to_frame('E[2]').shape == (3, 3)


def test_braiding_entries(braiding, golden):
    values = {key: parse_ratq(text) for key, text in golden['braiding'].items()}
    for i in range(3):
        assert braiding.column(i, i) == {(i, i): values['diagonal']}
    for i, j in itertools.combinations(range(3), 2):
        assert braiding.column(i, j) == {(j, i): values['increasing']}
        assert braiding.column(j, i) == {(j, i): values['decreasing_same'], (i, j): values['decreasing_swap']}
    assert braiding.entries()[0] == 'Psi(b1 (x) b1) = (q**(-2))*b1 (x) b1'


def test_braiding_is_invertible_and_braided(braiding):
    assert is_invertible(braiding)
    assert braid_equation_holds(braiding)


def test_hecke_relation(braiding, golden):
    hecke = hecke_detector(braiding)
    assert hecke is not None
    assert hecke.alpha == parse_ratq(golden['hecke']['alpha'])
    assert hecke.beta == parse_ratq(golden['hecke']['beta'])
    assert hecke.multiplicities == (6, 3)


def test_scalar_braiding_without_sub_datum(empty_a1):
    bm = braiding_matrix(empty_a1)
    hecke = hecke_detector(bm)
    assert hecke.beta is None
    assert hecke.alpha == parse_ratq('q**-2')
    assert hecke.describe() == 'Psi = q**(-2) id'


def test_quadratic_relations(a3_a2, golden):
    relations = relations_at_degree(a3_a2, 2)
    assert relations.dimension == golden['relations_dimension']
    algebra = a3_a2.algebra
    b = a3_a2.compute_B1().elements
    for i, j in itertools.combinations(range(3), 2):
        assert algebra.multiply(b[i], b[j]) == algebra.multiply(b[j], b[i]).scale(q)
    assert len(relations.formatted(['b1', 'b2', 'b3'])) == 3


def test_no_primitives_above_degree_one(a3_a2, golden):
    for n, expected in golden['primitives'].items():
        assert primitives_at_degree(a3_a2, int(n)).dimension == expected
    assert primitives_at_degree(a3_a2, 1).dimension == 3


def test_pairing_rank(a3_a2):
    assert pairing_rank(a3_a2, 0) == (1, 1)
    assert pairing_rank(a3_a2, 1) == (3, 3)
    assert pairing_rank(a3_a2, 2) == (6, 6)
    assert pairing_rank(a3_a2, 3) == (10, 10)


def test_integrability(a3_a2):
    report = integrability_check(a3_a2, a3_a2.compute_B1(), 4)
    assert report.passed
    assert report.degrees[('b1', 'F[2]')] == 2
    assert report.degrees[('b1', 'F[1]')] == 1
    assert not integrability_check(a3_a2, a3_a2.compute_B1(), 1).passed
