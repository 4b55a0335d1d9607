import argparse

import pytest
from tomlkit import parse

from config import EngineSettings, RunConfig, load_settings, open_settings
from exceptions import InputError, MissingInputError


def test_defaults():
    settings = EngineSettings()
    assert settings.max_degree == 6
    assert settings.orbit_cap == 512
    assert settings.format == 'text'
    assert (settings.random_trials, settings.map_trials) == (25, 100)


def test_missing_file_is_created_with_defaults(tmp_path):
    path = tmp_path / 'config.toml'
    settings = load_settings(path)
    assert path.exists()
    assert settings == EngineSettings()
    assert parse(path.read_text(encoding='utf-8'))['engine']['orbit_cap'] == 512


def test_values_are_read(tmp_path):
    path = tmp_path / 'config.toml'
    path.write_text('[engine]\nmax_degree = 3\nformat = "json"\n', encoding='utf-8')
    settings = load_settings(path)
    assert settings.max_degree == 3
    assert settings.format == 'json'
    assert settings.seed == EngineSettings().seed


@pytest.mark.parametrize('body', [
    '[engine]\nmax_degree = -1\n',
    '[engine]\norbit_cap = 0\n',
    '[engine]\nmap_trials = -1\n',
    '[engine]\nformat = "yaml"\n',
    '[engine]\ncolour = "red"\n',
    '[engine\n',
])
def test_invalid_files(tmp_path, body):
    path = tmp_path / 'config.toml'
    path.write_text(body, encoding='utf-8')
    with pytest.raises(InputError):
        load_settings(path)


def test_file_without_engine_table(tmp_path):
    path = tmp_path / 'config.toml'
    path.write_text('[other]\nx = 1\n', encoding='utf-8')
    assert EngineSettings.from_document(open_settings(path)) == EngineSettings()


def test_override_ignores_none():
    settings = EngineSettings().override(max_degree=2, orbit_cap=None, seed=5)
    assert (settings.max_degree, settings.orbit_cap, settings.seed) == (2, 512, 5)
    with pytest.raises(InputError):
        EngineSettings().override(nilbound=0)


def _args(tmp_path, **overrides):
    values = dict(command='compute', subdatum=tmp_path / 'sub.json', config=tmp_path / 'config.toml',
                  max_degree=None, orbit_cap=None, format=None, seed=None)
    values.update(overrides)
    return argparse.Namespace(**values)


def test_run_config_from_args(tmp_path):
    (tmp_path / 'sub.json').write_text('{}', encoding='utf-8')
    run = RunConfig.from_args(_args(tmp_path, max_degree=2, format='json'))
    assert run.paths == (tmp_path / 'sub.json',)
    assert (run.settings.max_degree, run.settings.format, run.settings.orbit_cap) == (2, 'json', 512)
    assert RunConfig.from_args(_args(tmp_path, command='selftest')).paths == ()


def test_run_config_requires_existing_inputs(tmp_path):
    with pytest.raises(MissingInputError):
        RunConfig.from_args(_args(tmp_path))
