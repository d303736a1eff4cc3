#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import json

import pytest

from cli import run

from .conftest import fixture_path


@pytest.fixture(autouse=True)
def _workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)


def t3co(*args):
    return run([str(arg) for arg in args], environ={})


def json_out(capsys):
    return json.loads(capsys.readouterr().out)


def test_usage_error_without_command(capsys):
    assert t3co() == 2


def test_parse_prints_shorthand(capsys):
    assert t3co('parse', fixture_path('walk-circuit.t3co')) == 0
    out = capsys.readouterr().out
    assert out.strip() == "⟨ =1 ∣ ≥1 ∣ circuit; undirected ∣ c : E ↦ ℝ≥0 ∣ min c(S) ⟩"


def test_parse_converts_to_longhand(capsys):
    assert t3co('--json', 'parse', fixture_path('walk-circuit.t3co'), '--emit', 'long') == 0
    data = json_out(capsys)
    assert data['notation'] == 'longhand'
    assert 'β: traversals ≥ 1;' in data['text']


def test_parse_emits_the_tree(capsys):
    assert t3co('parse', fixture_path('walk-circuit.t3co'), '--emit', 'ast') == 0
    data = json_out(capsys)
    assert data['node'] == 'VariantAst'
    assert len(data['fields']) == 5


def test_parse_enforces_the_notation(capsys):
    assert t3co('parse', fixture_path('walk-circuit.t3co'), '--notation', 'long') == 1


def test_syntax_error_is_a_negative_answer(capsys):
    assert t3co('parse', fixture_path('broken.t3co')) == 1
    assert 'Error' in capsys.readouterr().err


def test_explain(capsys):
    assert t3co('--json', 'explain', fixture_path('walk-circuit.t3co')) == 0
    data = json_out(capsys)
    assert 'γ tour' in data['explain']
    assert data['diagnostics'] == []


def test_explain_reports_unhoused_symbols(capsys):
    assert t3co('explain', fixture_path('unhoused.t3co')) == 1
    assert 'unhoused-symbol' in capsys.readouterr().err


def test_validate_first_walk(capsys):
    code = t3co('--json', 'validate', '--variant', fixture_path('walk-circuit.t3co'),
                '--instance', fixture_path('worked-example.t3i'), '--solution', fixture_path('worked-example-s1.sol'))
    assert code == 0
    data = json_out(capsys)
    assert data['feasible'] is True
    assert data['objectives'][0]['value'] == '8'


def test_validate_quota_shortfall(capsys):
    code = t3co('--json', 'validate', '--variant', fixture_path('quota.t3co'),
                '--instance', fixture_path('k4-quota.t3i'), '--solution', fixture_path('k4-triangle.sol'))
    assert code == 1
    failed = [check for check in json_out(capsys)['checks'] if not check['passed']]
    assert failed[0]['witness'] == 'LowerBound(q,4)'


def test_validate_missing_file(capsys, tmp_path):
    code = t3co('validate', '--variant', fixture_path('walk-circuit.t3co'),
                '--instance', fixture_path('worked-example.t3i'), '--solution', tmp_path / 'absent.sol')
    assert code == 2


def test_validate_binding_error(capsys):
    code = t3co('validate', '--variant', fixture_path('quota.t3co'),
                '--instance', fixture_path('worked-example.t3i'), '--solution', fixture_path('worked-example-s1.sol'))
    assert code == 2
    assert 'Error' in capsys.readouterr().err


def test_solve_exactly(capsys):
    code = t3co('--json', 'solve', '--variant', fixture_path('walk-circuit.t3co'),
                '--instance', fixture_path('worked-example.t3i'))
    assert code == 0
    data = json_out(capsys)
    assert data['status'] == 'optimal'
    assert data['value'] == '8'


def test_solve_over_the_node_limit(capsys):
    code = t3co('solve', '--variant', fixture_path('walk-circuit.t3co'),
                '--instance', fixture_path('worked-example.t3i'), '--max-nodes', 3)
    assert code == 1
    assert 'limit-exceeded' in capsys.readouterr().out


def test_solve_with_nearest_neighbor(capsys):
    code = t3co('--json', 'solve', '--variant', fixture_path('metric.t3co'),
                '--instance', fixture_path('k3.tsp'), '--method', 'nn')
    assert code == 0
    data = json_out(capsys)
    assert data['status'] == 'feasible'
    assert data['value'] == '7'


def test_tree_heuristic_needs_a_metric(capsys):
    code = t3co('solve', '--variant', fixture_path('metric.t3co'),
                '--instance', fixture_path('k3.tsp'), '--method', 'double-tree')
    assert code == 2


def test_catalog_show(capsys):
    assert t3co('--json', 'catalog', 'show', 'standard-metric') == 0
    data = json_out(capsys)
    assert data['family'] == 'standard'
    assert any(bound['citation'] == 'KLS2015' for bound in data['bounds'])


def test_catalog_unknown_id(capsys):
    assert t3co('catalog', 'show', 'no-such-entry') == 1


def test_catalog_list_family(capsys):
    assert t3co('--json', 'catalog', 'list', '--family', 'quota') == 0
    entries = json_out(capsys)
    assert entries
    assert {entry['family'] for entry in entries} == {'quota'}


@pytest.mark.slow
def test_catalog_verify(capsys):
    assert t3co('catalog', 'verify') == 0
    assert '0 problem(s)' in capsys.readouterr().out


def test_bad_configuration(capsys, tmp_path):
    (tmp_path / 't3co.toml').write_text('[solver]\nmax_nodes = 0\n', encoding='utf-8')
    code = t3co('solve', '--variant', fixture_path('walk-circuit.t3co'), '--instance', fixture_path('worked-example.t3i'))
    assert code == 2
    assert 'Configuration error' in capsys.readouterr().err
