#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import io

import pytest

from catalog import DEFAULT_CORPUS
from config import SettingsManager
from solvers import SolveLimits
from utils.log import configure_logging, get_logger


@pytest.fixture
def no_file(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


def write_config(tmp_path, text):
    path = tmp_path / 'settings.toml'
    path.write_text(text, encoding='utf-8')
    return path


def test_defaults(no_file):
    settings = SettingsManager(environ={})
    assert settings.solve_limits() == SolveLimits()
    assert settings.corpus_dir == DEFAULT_CORPUS
    assert settings.log_level == 'WARNING'
    assert not settings.debug


def test_file_in_working_directory(no_file):
    (no_file / 't3co.toml').write_text('[solver]\nmax_nodes = 7\n', encoding='utf-8')
    assert SettingsManager(environ={}).solve_limits().max_nodes == 7


def test_named_file(tmp_path):
    path = write_config(tmp_path, '[solver]\nmax_nodes = 8\nworkers = 2\ntime_budget = 1.5\n'
                                  '[logging]\nlevel = "debug"\n')
    settings = SettingsManager(path, environ={})
    assert settings.solve_limits() == SolveLimits(max_nodes=8, workers=2, time_budget=1.5)
    assert settings.log_level == 'DEBUG'


def test_environment_wins_over_file(tmp_path):
    path = write_config(tmp_path, '[solver]\nmax_nodes = 8\n[catalog]\ncorpus_dir = "elsewhere"\n')
    environ = {'T3CO_MAX_NODES': '5', 'T3CO_CORPUS_DIR': str(tmp_path)}
    settings = SettingsManager(path, environ=environ)
    assert settings.solve_limits().max_nodes == 5
    assert settings.corpus_dir == tmp_path


def test_config_variable_names_the_file(tmp_path):
    path = write_config(tmp_path, '[solver]\nmax_walk_edges = 12\n')
    settings = SettingsManager(environ={'T3CO_CONFIG': str(path)})
    assert settings.solve_limits().max_walk_edges == 12


def test_missing_named_file(tmp_path):
    settings = SettingsManager(tmp_path / 'absent.toml', environ={})
    with pytest.raises(ValueError, match='Configuration error'):
        settings.solve_limits()


def test_invalid_toml(tmp_path):
    settings = SettingsManager(write_config(tmp_path, 'max_nodes = = 3\n'), environ={})
    with pytest.raises(ValueError, match='Configuration error'):
        settings.solve_limits()


@pytest.mark.parametrize('name, value', [
    ('T3CO_MAX_NODES', '0'),
    ('T3CO_MAX_NODES', 'many'),
    ('T3CO_WORKERS', '-2'),
    ('T3CO_TIME_BUDGET', 'soon'),
])
def test_invalid_limits(no_file, name, value):
    with pytest.raises(ValueError, match='Configuration error'):
        SettingsManager(environ={name: value}).solve_limits()


def test_section_must_be_a_table(tmp_path):
    settings = SettingsManager(write_config(tmp_path, 'solver = 3\n'), environ={})
    with pytest.raises(ValueError, match='must be a table'):
        settings.solve_limits()


def test_unknown_log_level(no_file):
    with pytest.raises(ValueError, match='unknown log level'):
        SettingsManager(environ={'T3CO_LOG_LEVEL': 'loud'}).log_level


def test_debug_flag(no_file):
    assert SettingsManager(environ={'T3CO_DEBUG': '1'}).debug
    assert not SettingsManager(environ={'T3CO_DEBUG': 'yes'}).debug


def test_logging_goes_to_the_given_stream():
    stream = io.StringIO()
    configure_logging('info', stream)
    get_logger('solvers.test').info('enumeration started')
    get_logger('solvers.test').debug('hidden')
    output = stream.getvalue()
    assert 'INFO t3co.solvers.test: enumeration started' in output
    assert 'hidden' not in output
    configure_logging('WARNING')


def test_logging_rejects_unknown_levels():
    with pytest.raises(ValueError):
        configure_logging('chatty')
