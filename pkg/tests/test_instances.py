#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from dataclasses import replace
from fractions import Fraction
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.costs import INF
from core.errors import (
    BindingError, ClosureError, InstanceInvariantError, RangeError, SchemaError, UnsupportedFormatError,
)
from instances import (
    VERIFIED, VIOLATED, bind, check_declared_properties, check_properties, closure_edge_id,
    expand_closure_walk, load_native, load_tsplib, metric_closure, pair_costs, recheck, save_native,
)
from instances.generators import collinear, complete_instance, random_complete, random_connected, with_time_windows
from core.walk import parse_walk_text

from .conftest import fixture_text, variant_of
from .strategies import connected_instances, metric_instances, seeds


def test_worked_example_fixture(worked_example):
    assert worked_example.name == 'worked_example'
    assert worked_example.graph.nodes == ('v1', 'v2', 'v3', 'v4')
    assert len(worked_example.graph.edges) == 5
    assert {edge.id for edge in worked_example.graph.edges_between('v4', 'v1')} == {'e4', 'e5'}
    assert set(worked_example.table('p').values.values()) == {1}


def test_native_text_round_trip(worked_example):
    again = load_native(save_native(worked_example))
    assert again.graph == worked_example.graph
    assert again.tables == worked_example.tables
    assert save_native(again) == save_native(worked_example)


def test_schema_error_names_the_line():
    with pytest.raises(SchemaError) as excinfo:
        load_native("NODES\nv1 v2\nEDGES\ne1 v1\n")
    assert excinfo.value.line == 4


def test_value_outside_declared_range():
    with pytest.raises(RangeError):
        load_native("NODES\nv1 v2\nEDGES\ne1 v1 v2\nCOSTS c edges ℝ≥0\ne1 -1\n")


def test_empty_time_window_is_rejected():
    text = "NODES\nv1\nCOSTS r nodes\nv1 5\nCOSTS d nodes\nv1 3\n"
    with pytest.raises(InstanceInvariantError):
        load_native(text)


def test_infinite_deadline_is_accepted():
    instance = load_native("NODES\nv1\nCOSTS r nodes\nv1 0\nCOSTS d nodes\nv1 inf\n")
    assert instance.table('d').value('v1') == INF


def test_binding_reports_missing_parameter(fixture_variant):
    instance = load_native(fixture_text('k4-quota.t3i').replace('b = 4\n', 'm = 1\n'))
    with pytest.raises(BindingError):
        bind(instance, fixture_variant('quota.t3co'))


def test_binding_reports_missing_table(worked_example, fixture_variant):
    with pytest.raises(BindingError):
        bind(worked_example, fixture_variant('quota.t3co'))


def test_tsplib_explicit_matrix():
    instance = load_tsplib(fixture_text('k3.tsp'))
    assert instance.graph.nodes == ('1', '2', '3')
    assert instance.graph.is_complete()
    assert pair_costs(instance)[('1', '3')] == 5


def test_tsplib_euclidean_coordinates():
    instance = load_tsplib(fixture_text('collinear.tsp'))
    assert pair_costs(instance)[('1', '3')] == 2
    assert check_properties(instance, ['euclidean']).status('euclidean') == VERIFIED


def test_tsplib_unsupported_keyword():
    text = fixture_text('k3.tsp').replace('TYPE : TSP', 'TYPE : CVRP')
    with pytest.raises(UnsupportedFormatError):
        load_tsplib(text)


def test_closure_distances(worked_example):
    closed = metric_closure(worked_example)
    costs = pair_costs(closed)
    assert costs[('v1', 'v3')] == 3
    assert costs[('v3', 'v4')] == 3
    assert closed.graph.is_complete()
    assert check_properties(closed, ['triangle']).status('triangle') == VERIFIED
    assert closed.closure_paths[closure_edge_id('v1', 'v3')] == ('v1', 'e1', 'v2', 'e2', 'v3')


def test_closure_walk_expands_to_original_edges(worked_example):
    closed = metric_closure(worked_example)
    walk = parse_walk_text(f"v1 {closure_edge_id('v1', 'v3')} v3", closed.graph)
    expanded = expand_closure_walk(closed, worked_example, walk)
    assert str(expanded) == 'v1 e1 v2! e2 v3'


def test_closure_of_disconnected_graph():
    instance = load_native("NODES\nv1 v2 v3\nEDGES\ne1 v1 v2\nCOSTS c edges\ne1 1\n")
    with pytest.raises(ClosureError):
        metric_closure(instance)


def test_triangle_violation_has_a_witness():
    instance = load_tsplib(fixture_text('k3.tsp'))
    check = check_properties(instance, ['triangle']).checks[0]
    assert check.status == VIOLATED
    assert check.witness == ('1', '2', '3')
    assert recheck(instance, check)


def test_declared_metric_expands_to_parameters(fixture_variant):
    instance = load_tsplib(fixture_text('collinear.tsp'))
    report = check_declared_properties(instance, fixture_variant('metric.t3co'))
    assert report.verified('identity', 'symmetric', 'triangle')


def test_shoreline_on_points_along_a_line():
    instance = collinear([0, 1, 3, 7])
    assert check_properties(instance, ['shoreline']).status('shoreline') == VERIFIED


def test_generators_are_seeded():
    assert random_complete(7, 5) == random_complete(7, 5)
    windows = with_time_windows(random_complete(7, 5), 3)
    for node in windows.graph.nodes:
        assert windows.table('r').value(node) <= windows.table('d').value(node)


def _triangle_by_scan(instance):
    pairs = pair_costs(instance)
    for u, w, v in permutations(instance.graph.nodes, 3):
        if pairs[(u, v)] > pairs[(u, w)] + pairs[(w, v)]:
            return False
    return True


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_triangle_verdict_matches_triple_scan(seed):
    instance = random_complete(seed, 5)
    status = check_properties(instance, ['triangle']).status('triangle')
    assert (status == VERIFIED) == _triangle_by_scan(instance)


@settings(max_examples=100, deadline=None)
@given(connected_instances(max_nodes=6))
def test_closure_is_idempotent(instance):
    once = metric_closure(instance)
    twice = metric_closure(once)
    assert pair_costs(twice) == pair_costs(once)


@settings(max_examples=30, deadline=None)
@given(metric_instances())
def test_random_metric_instances_are_metric(instance):
    report = check_properties(instance, ['symmetric', 'triangle'])
    assert report.consistent
    assert all(value > 0 for value in instance.table('c').values.values())


def test_shoreline_violation_has_a_witness():
    instance = load_native(fixture_text('shoreline-broken.t3i'))
    report = check_properties(instance, ['shoreline', 'euclidean', 'triangle'])
    shoreline, euclidean, triangle = report.checks
    assert shoreline.status == VIOLATED
    assert shoreline.witness == ('v1', 'v2', 'v3')
    assert recheck(instance, shoreline)
    assert euclidean.status == VIOLATED
    assert euclidean.witness == ('e1_3',)
    assert recheck(instance, euclidean)
    assert triangle.status == VIOLATED


def test_recheck_rejects_stale_witnesses():
    broken = load_native(fixture_text('shoreline-broken.t3i'))
    check = check_properties(broken, ['shoreline']).checks[0]
    repaired = broken.with_tables(c=replace(broken.table('c'), values={'e1_2': 1, 'e1_3': 3, 'e2_3': 2}))
    assert check_properties(repaired, ['shoreline', 'euclidean']).consistent
    assert not recheck(repaired, check)
    euclidean = check_properties(broken, ['euclidean']).checks[0]
    assert not recheck(repaired, euclidean)


def _symmetric_by_scan(instance):
    pairs = pair_costs(instance)
    return all(pairs[(u, v)] == pairs[(v, u)] for u, v in permutations(instance.graph.nodes, 2))


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=2, max_value=5), st.data())
def test_symmetric_verdict_matches_pair_scan(n, data):
    costs = {}

    def cost(u, v):
        key = (u, v)
        if key not in costs:
            mirror = costs.get((v, u))
            if mirror is not None and data.draw(st.booleans()):
                costs[key] = mirror
            else:
                costs[key] = data.draw(st.integers(min_value=1, max_value=3))
        return costs[key]

    instance = complete_instance(cost, n, directed=True)
    status = check_properties(instance, ['symmetric']).status('symmetric')
    assert (status == VERIFIED) == _symmetric_by_scan(instance)


def _identity_by_scan(instance):
    return all(value > 0 for (u, v), value in pair_costs(instance).items() if u != v)


@settings(max_examples=60, deadline=None)
@given(seeds, st.integers(min_value=2, max_value=6))
def test_identity_verdict_matches_pair_scan(seed, n):
    instance = random_connected(seed, n, low=0, high=2, parallel=0.3)
    check = check_properties(instance, ['identity']).checks[0]
    assert check.holds == _identity_by_scan(instance)
    if not check.holds:
        assert recheck(instance, check)


def _shoreline_by_scan(instance):
    pairs = pair_costs(instance)
    nodes = sorted(instance.graph.nodes)
    if any(pairs[(u, v)] != pairs[(v, u)] for u, v in combinations(nodes, 2)):
        return False
    for vi, vk, vj in combinations(nodes, 3):
        far, left, right = pairs[(vi, vj)], pairs[(vi, vk)], pairs[(vk, vj)]
        if not max(left, right) <= far <= left + right:
            return False
    return True


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(min_value=0, max_value=20), min_size=3, max_size=7, unique=True),
       st.integers(min_value=-3, max_value=3), st.data())
def test_shoreline_verdict_matches_triple_scan(positions, shift, data):
    instance = collinear(positions)
    edge = data.draw(st.sampled_from(sorted(edge.id for edge in instance.graph.edges)))
    table = instance.table('c')
    values = dict(table.values)
    values[edge] = max(Fraction(0), values[edge] + shift)
    instance = instance.with_tables(c=replace(table, values=values))
    check = check_properties(instance, ['shoreline']).checks[0]
    assert check.holds == _shoreline_by_scan(instance)
    if not check.holds:
        assert recheck(instance, check)
