import pytest

from braided import BraidedHopfAlgebra
from properties import PropertySuite
from rootdata import builtin_datum, empty_sub_datum, load_sub_datum


@pytest.fixture(scope='module')
def small(fixtures):
    return BraidedHopfAlgebra(load_sub_datum(fixtures / 'a2_in_a3.json'), max_degree=2)


def test_suites_pass(small):
    results = PropertySuite(small, seed=7, trials=4, map_trials=4).run()
    assert len(results) == 10
    failed = [(r.name, r.witness) for r in results if not r.passed]
    assert not failed
    assert all(r.checked or r.skipped for r in results)


def test_suites_pass_without_sub_datum():
    engine = BraidedHopfAlgebra(empty_sub_datum(builtin_datum('A', 2, 'gl')), max_degree=2)
    assert all(r.passed for r in PropertySuite(engine, seed=3, trials=3, map_trials=3).run())


def test_corrupted_serre_coefficient_is_caught(small):
    results = {r.name: r for r in PropertySuite(small, seed=7, trials=2, map_trials=2, corrupt_serre=True).run()}
    serre = results['q-Serre relations reduce to zero']
    assert not serre.passed
    assert serre.witness.startswith('Serre F(')


def test_low_bound_skips_braiding(fixtures):
    engine = BraidedHopfAlgebra(load_sub_datum(fixtures / 'a2_in_a3.json'), max_degree=0)
    results = {r.name: r for r in PropertySuite(engine, trials=2, map_trials=2).run()}
    assert results['Braiding on B_1 (x) B_1'].skipped
    assert results['Braided bialgebra law'].skipped
    assert all(r.passed for r in results.values())


def test_seed_makes_runs_reproducible(small):
    first = PropertySuite(small, seed=11, trials=3, map_trials=3)
    second = PropertySuite(small, seed=11, trials=3, map_trials=3)
    assert [first.random_scalar() for _ in range(5)] == [second.random_scalar() for _ in range(5)]


def test_word_length_follows_the_degree_bound(small, a3_a2):
    assert PropertySuite(small).word_length == 2
    assert PropertySuite(a3_a2).word_length == 3


@pytest.mark.slow
def test_suites_at_full_trial_counts(a3_a2):
    results = {r.name: r for r in PropertySuite(a3_a2).run()}
    failed = [(r.name, r.witness) for r in results.values() if not r.passed]
    assert not failed
    assert results['Delta, counit, S on random pairs'].checked == 100
    assert results['Upsilon onto the bosonisation'].checked == 100
    assert results['Braided bialgebra law'].checked == 25
    assert results['B_n by products equals B_n by projection'].checked == 4
    assert not any(r.skipped for r in results.values())
