import json

import pytest

from exceptions import DatumFormatError, InputError, MissingInputError
from rootdata import (builtin_datum, candidate_embeddings, chi_grading, complement_basis, direct_sum,
                      direct_sum_inclusions, empty_sub_datum, is_dominant, load_any, load_datum, load_sub_datum,
                      parse_builtin, restriction_rho, standard_embedding, validate_any, validate_sub_root_datum)


POSITIVE = ['a2_in_a3.json', 'identity_a3.json', 'a1a1_in_a3.json', 'a1_in_a1a1.json', 'a2_in_a2a1.json',
            'empty_in_a1.json', 'empty_in_a2.json', 'a1_in_affine_a1.json']


@pytest.mark.parametrize('form', ['sc', 'gl'])
@pytest.mark.parametrize('n', [1, 2, 3, 4])
def test_builtin_data_are_valid(n, form):
    datum = builtin_datum('A', n, form)
    assert datum.check().ok
    assert datum.y_regular()
    assert datum.cartan[0][0] == 2
    if n > 1:
        assert datum.cartan[0][1] == -1


def test_builtin_errors():
    with pytest.raises(InputError):
        builtin_datum('B', 2)
    with pytest.raises(InputError):
        builtin_datum('A', 0)
    with pytest.raises(InputError):
        parse_builtin('builtin:Ax')
    assert parse_builtin('builtin:A3:gl') == builtin_datum('A', 3, 'gl')


def test_lattice_maps_of_gl_a3():
    a3 = builtin_datum('A', 3, 'gl')
    assert a3.wt2((1, 1, 1)) == (1, 0, 0, -1)
    assert a3.wt1((0, 1, 0)) == (0, 1, -1, 0)
    assert a3.bilinear((1, 0, 0), (0, 1, 0)) == -1
    assert a3.k_exponent((0, 0, 1), 2) == 2
    assert a3.dot_of((1, 1, 0), (1, 1, 0)) == 2


@pytest.mark.parametrize('name', POSITIVE)
def test_positive_fixtures_validate(fixtures, name):
    reports = validate_any(load_any(fixtures / name))
    assert all(r.ok for r in reports), [(r.subject, r.failed) for r in reports]


@pytest.mark.parametrize('condition', ['i', 'ii', 'iii', 'iv', 'v', 'vi'])
def test_mutations_name_the_broken_condition(fixtures, condition):
    s = load_sub_datum(fixtures / f'mutation_{condition}.json')
    report = validate_sub_root_datum(s)
    assert not report.ok
    assert condition in report.failed
    witness = next(c.witness for c in report.conditions if c.label == condition)
    assert witness
    with pytest.raises(InputError, match=f'condition {report.failed[0]} '):
        report.require()


@pytest.mark.parametrize('condition', ['ii', 'iii', 'iv', 'v', 'vi'])
def test_single_condition_mutations_fail_alone(fixtures, condition):
    report = validate_sub_root_datum(load_sub_datum(fixtures / f'mutation_{condition}.json'))
    assert report.failed == [condition]


def test_non_injective_iota_also_breaks_dot_and_roots(fixtures):
    # dot'(a, b) <= 0 for a != b while dot(i, i) > 0, and i1'(a) != i1'(b)
    # cannot both land on i1(i) through an injective s_Y.
    report = validate_sub_root_datum(load_sub_datum(fixtures / 'mutation_i.json'))
    assert report.failed == ['i', 'ii', 'vi']


def test_index_two_s_y_leaves_only_the_sub_pairing_degenerate(fixtures):
    # With the pairing preserved, a non-saturated s_Y forces det <y', x'>' = 2.
    s = load_sub_datum(fixtures / 'mutation_iii.json')
    assert s.ambient.check().ok
    assert [c.label for c in s.sub.check().conditions if not c.passed] == ['perfect']
    report = validate_sub_root_datum(s)
    assert report.failed == ['iii']
    assert '2' in next(c.witness for c in report.conditions if c.label == 'iii')


def test_complement_and_restriction(fixtures):
    s = load_sub_datum(fixtures / 'a2_in_a3.json')
    assert complement_basis(s) == ((0, 0, 0, 1),) or complement_basis(s) == ((0, 0, 0, -1),)
    assert s.D == (2,)
    assert restriction_rho(s, (1, 2, 3, 4)) == (1, 2, 3)
    assert s.chi((0, 2, 2, 1)) == 2
    assert s.chi_of_degree((1, 1, 1)) == 1
    assert chi_grading(s, (2, 0, 2)) == 2
    assert s.split_k((1, -2, 3)) == ((1, -2, 0), (0, 0, 3))


def test_standard_embedding_matches_fixture(fixtures):
    built = standard_embedding(builtin_datum('A', 3, 'gl'), builtin_datum('A', 2, 'gl'), (0, 1))
    loaded = load_sub_datum(fixtures / 'a2_in_a3.json')
    assert built.iota == loaded.iota
    assert built.sy == loaded.sy and built.sx == loaded.sx
    assert validate_sub_root_datum(built).ok


def test_empty_sub_datum_deletes_everything():
    s = empty_sub_datum(builtin_datum('A', 2, 'gl'))
    assert s.D == (0, 1)
    assert validate_sub_root_datum(s).ok


def test_candidate_embeddings_of_a2_in_a3():
    found = candidate_embeddings(builtin_datum('A', 3), builtin_datum('A', 2))
    assert sorted(found) == [(0, 1), (1, 0), (1, 2), (2, 1)]


def test_direct_sum_inclusions_are_sub_root_data():
    a1, a2 = builtin_datum('A', 1, 'gl'), builtin_datum('A', 2, 'gl')
    total = direct_sum(a2, a1)
    assert total.n == 3 and total.rank_y == 5
    assert total.check().ok
    for s in direct_sum_inclusions(a2, a1):
        assert validate_sub_root_datum(s).ok
    first, second = direct_sum_inclusions(a2, a1)
    assert first.D == (2,) and second.D == (0, 1)


def test_dominance():
    a2 = builtin_datum('A', 2)
    assert is_dominant(a2, (1, 0), range(2))
    assert not is_dominant(a2, (-1, 2), range(2))


def test_loader_errors(fixtures, tmp_path):
    with pytest.raises(MissingInputError):
        load_datum(tmp_path / 'absent.json')
    with pytest.raises(DatumFormatError) as excinfo:
        load_any(fixtures / 'broken_json.json')
    assert excinfo.value.location.startswith('line')

    extra = tmp_path / 'extra.json'
    data = builtin_datum('A', 2).to_dict()
    data['colour'] = 'blue'
    extra.write_text(json.dumps(data), encoding='utf-8')
    with pytest.raises(DatumFormatError, match='Unknown fields'):
        load_datum(extra)

    short = tmp_path / 'short.json'
    data = builtin_datum('A', 2).to_dict()
    data['dot'] = [[2, -1]]
    short.write_text(json.dumps(data), encoding='utf-8')
    with pytest.raises(DatumFormatError) as excinfo:
        load_datum(short)
    assert excinfo.value.location == 'dot'


def test_sub_datum_round_trip(fixtures, tmp_path):
    s = load_sub_datum(fixtures / 'a1a1_in_a3.json')
    path = tmp_path / 'copy.json'
    path.write_text(json.dumps(s.to_dict()), encoding='utf-8')
    again = load_sub_datum(path)
    assert again.iota == s.iota == (0, 2)
    assert again.D == (1,)
    assert validate_sub_root_datum(again).ok
