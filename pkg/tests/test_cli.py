import json

import pytest

from main import main


@pytest.fixture
def run(tmp_path):
    """Invoke the command line; returns (exit code, output path)."""
    config = tmp_path / 'config.toml'

    def invoke(*argv, out_name='report.json', fmt='json'):
        out = tmp_path / out_name
        args = [argv[0], '--config', str(config), '--format', fmt, '--out', str(out), *argv[1:]]
        try:
            main(args)
            code = 0
        except SystemExit as e:
            code = e.code
        return code, out

    return invoke


def _json(path):
    return json.loads(path.read_text(encoding='utf-8'))


def test_validate_positive(run, fixtures):
    code, out = run('validate', str(fixtures / 'a2_in_a3.json'), str(fixtures / 'affine_a1.json'))
    assert code == 0
    reports = _json(out)
    assert all(r['ok'] for r in reports)


def test_validate_names_the_failing_condition(run, fixtures):
    code, out = run('validate', str(fixtures / 'mutation_iii.json'))
    assert code == 1
    conditions = [c for r in _json(out) for c in r['conditions'] if not c['passed']]
    assert 'iii' in [c['label'] for c in conditions]
    assert all(c['witness'] for c in conditions)


def test_report_goes_into_new_directories(run, fixtures, tmp_path):
    code, out = run('validate', str(fixtures / 'a2_in_a3.json'), out_name='reports/a3/validate.json')
    assert code == 0
    assert out == tmp_path / 'reports' / 'a3' / 'validate.json'
    assert all(r['ok'] for r in _json(out))


def test_unwritable_report_path_is_an_input_error(run, fixtures, tmp_path):
    (tmp_path / 'taken').mkdir()
    code, _ = run('validate', str(fixtures / 'a2_in_a3.json'), out_name='taken')
    assert code == 2


@pytest.mark.parametrize('name', ['broken_json.json', 'does_not_exist.json'])
def test_validate_input_errors(run, fixtures, name):
    code, out = run('validate', str(fixtures / name))
    assert code == 2
    assert not out.exists()


def test_compute_report(run, fixtures):
    code, out = run('compute', str(fixtures / 'a2_in_a3.json'), '--max-degree', '2')
    assert code == 0
    data = _json(out)
    assert data['index'] == 3
    assert data['corank'] == 1
    assert data['deleted'] == ['3']
    assert data['hilbert'] == [1, 3, 6]
    assert data['relations']['dimension'] == 3
    assert data['nichols']['passed']
    assert data['zero_component']['passed']
    assert data['integrability']['passed']
    assert data['hecke']['beta'] == '1'
    assert not data['partial']


def test_compute_trivial_algebra(run, fixtures):
    code, out = run('compute', str(fixtures / 'identity_a3.json'), '--max-degree', '2')
    assert code == 0
    data = _json(out)
    assert data['index'] == 0
    assert data['hilbert'] == [1, 0, 0]
    assert data['braiding'] == []


def test_compute_orbit_cap(run, fixtures):
    code, out = run('compute', str(fixtures / 'a1_in_affine_a1.json'), '--max-degree', '1', '--orbit-cap', '2')
    assert code == 3
    data = _json(out)
    assert data['partial']
    assert data['cap_exceeded']['cap'] == 2
    assert 'index' not in data


def test_compute_text_report(run, fixtures):
    code, out = run('compute', str(fixtures / 'empty_in_a1.json'), '--max-degree', '2',
                    out_name='report.txt', fmt='text')
    assert code == 0
    text = out.read_text(encoding='utf-8')
    assert 'Basis of B_1' in text
    assert 'Hilbert series' in text


def test_compute_is_deterministic(run, fixtures):
    argv = ('compute', str(fixtures / 'a1_in_a1a1.json'), '--max-degree', '2')
    _, first = run(*argv, out_name='first.json')
    _, second = run(*argv, out_name='second.json')
    assert first.read_bytes() == second.read_bytes()


def test_selftest(run):
    code, out = run('selftest', '--max-degree', '0')
    assert code == 0
    suites = _json(out)
    assert len(suites) == 2
    assert all(suite['passed'] for suite in suites)


def test_selftest_detects_a_corrupted_relation(run):
    code, out = run('selftest', '--max-degree', '0', '--corrupt-serre')
    assert code == 1
    assert not _json(out)[0]['passed']
