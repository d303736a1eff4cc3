#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.costs import INF
from core.errors import BindingError, SchemaError, UnsupportedError
from core.walk import Walk, parse_walk_text, walk_parts
from instances.generators import random_complete, with_time_windows
from instances.native_format import load_native
from solvers import OPTIMAL, brute_force
from solvers.heuristics import tour_walk
from validator import Solution, evaluate_objective, format_solution, parse_solution_text, validate

from .conftest import corpus_text, fixture_text, variant_of
from .strategies import connected_instances, seeds, walks_in

S1 = 'v1 e1 v2 e2 v3 e2 e3 v4 e4'
S3 = 'v1 e1 v2 e2 v3 e2 e3 v4 e5'

BOTTLENECK = "⟨ =1 ∣ ≥1 ∣ undirected ∣ c : E ↦ ℝ≥0 ∣ min max {c(e) : e ∈ E_S} ⟩"
SCATTER = "⟨ =1 ∣ ≥1 ∣ undirected ∣ c : E ↦ ℝ≥0 ∣ max min {c(e) : e ∈ E_S} ⟩"
WINDOWED_PATH = """⟨ =1 ∣ =1; always ∣ complete; undirected ∣
  c : E ↦ ℝ≥0; w : E ↦ ℝ≥0, waiting ∣
  ∀ i ∈ {0, …, k} : r(v_i) ≤ c(S_{<i}) + w(S_{≤i}) ≤ d(v_i);
  min c(S) + w(S) ⟩"""
PLAIN_PATH = "⟨ =1 ∣ =1; always ∣ complete; undirected ∣ c : E ↦ ℝ≥0 ∣ min c(S) ⟩"


def _solution(instance, text):
    return Solution(parse_walk_text(text, instance.graph))


def test_walk_variant_accepts_first_walk(worked_example, fixture_variant):
    report = validate(fixture_variant('walk-circuit.t3co'), worked_example, _solution(worked_example, S1))
    assert report.feasible
    assert report.value(0) == 8
    assert report.failures() == ()
    assert not report.extensions_unchecked


def test_exactly_once_rejects_second_traversal(worked_example, fixture_variant):
    report = validate(fixture_variant('hamiltonian-circuit.t3co'), worked_example, _solution(worked_example, S1))
    assert not report.feasible
    failed = report.failures()
    assert [check.id for check in failed] == ['traversals']
    assert failed[0].witness == 'v2'


def test_node_costs_enter_the_objective(worked_example, fixture_variant):
    variant = fixture_variant('node-costs.t3co')
    assert validate(variant, worked_example, _solution(worked_example, S1)).value(0) == 12
    assert validate(variant, worked_example, _solution(worked_example, S3)).value(0) == 13


def test_open_walk_fails_circuit(worked_example, fixture_variant):
    report = validate(fixture_variant('walk-circuit.t3co'), worked_example, _solution(worked_example, 'v1 e1 v2 e2 v3'))
    assert not report.feasible
    assert 'circuit' in [check.id for check in report.failures()]


def test_invalid_walk_stops_early(worked_example, fixture_variant):
    report = validate(fixture_variant('walk-circuit.t3co'), worked_example, _solution(worked_example, 'v1 e2 v3'))
    assert not report.feasible
    assert [check.id for check in report.checks] == ['walk']


def test_quota_shortfall_names_the_bound(fixture_variant):
    instance = load_native(fixture_text('k4-quota.t3i'))
    solution = parse_solution_text(fixture_text('k4-triangle.sol'), instance.graph)
    report = validate(fixture_variant('quota.t3co'), instance, solution)
    assert not report.feasible
    failed = report.failures()
    assert len(failed) == 1
    assert failed[0].id.startswith('bound:')
    assert failed[0].witness == 'LowerBound(q,4)'


def test_bottleneck_and_scatter_on_worked_example(worked_example):
    assert validate(variant_of(BOTTLENECK), worked_example, _solution(worked_example, S1)).value(0) == 2
    assert validate(variant_of(SCATTER), worked_example, _solution(worked_example, S3)).value(0) == 1


def test_templates_are_not_executable(worked_example):
    with pytest.raises(UnsupportedError):
        validate(variant_of(corpus_text('standard-template')), worked_example, _solution(worked_example, S1))


def test_extension_is_reported_unchecked(worked_example):
    text = "⊕1: side condition\n⟨ =1 ∣ ≥1 ∣ circuit; undirected ∣ c : E ↦ ℝ≥0 ∣ min c(S) ⟩^{⊕1}"
    report = validate(variant_of(text), worked_example, _solution(worked_example, S1))
    assert report.feasible
    assert report.extensions_unchecked


def test_missing_table_is_a_binding_error(worked_example, fixture_variant):
    with pytest.raises(BindingError):
        validate(fixture_variant('quota.t3co'), worked_example, _solution(worked_example, S1))


def test_solution_text_with_shares(worked_example):
    text = "v1 e1 v2 e2 v3\nshares:\n1 v2 3/2\n2 v3 1\n"
    solution = parse_solution_text(text, worked_example.graph)
    assert solution.share(1, 'v2') == Fraction(3, 2)
    assert solution.share(1, 'v3') == 0
    assert parse_solution_text(format_solution(solution), worked_example.graph) == solution


def test_malformed_share_row(worked_example):
    with pytest.raises(SchemaError) as excinfo:
        parse_solution_text("v1 e1 v2\nshares:\n1 v2\n", worked_example.graph)
    assert excinfo.value.line == 3


def test_arrival_times_wait_for_release():
    instance = random_complete(1, 3)
    costs = instance.table('c')
    instance = with_time_windows(instance, 5, horizon=30, tight=1.0)
    walk = tour_walk(instance, ['v1', 'v2', 'v3'])
    open_walk = Walk(walk.items[:-2], instance.graph)
    report = validate(variant_of(WINDOWED_PATH), instance, Solution(open_walk))
    release = instance.table('r')
    first = release.value('v1')
    second = max(first + costs.value('e1_2'), release.value('v2'))
    assert report.arrival_times[:2] == (first, second)


def _fold_check(data):
    instance = data.draw(connected_instances(max_nodes=5))
    walk = data.draw(walks_in(instance, max_edges=7, min_edges=1))
    costs = [instance.table('c').value(edge) for edge in walk.edge_ids]
    solution = Solution(walk)
    assert evaluate_objective(variant_of(BOTTLENECK), instance, solution)[0].value == max(costs)
    assert evaluate_objective(variant_of(SCATTER), instance, solution)[0].value == min(costs)


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_edge_aggregates_match_a_direct_fold(data):
    _fold_check(data)


@pytest.mark.slow
@settings(max_examples=1000, deadline=None)
@given(st.data())
def test_edge_aggregates_match_a_direct_fold_on_many_walks(data):
    _fold_check(data)


def _schedulable(instance, order, horizon):
    """Every integer wait vector up to the horizon, kept as the set of reachable arrival times."""
    release, deadline, costs = instance.table('r'), instance.table('d'), instance.table('c')
    times = {Fraction(0)}
    previous = None
    for node in order:
        step = Fraction(0)
        if previous is not None:
            step = costs.value(instance.graph.edges_between(previous, node)[0].id)
        reachable = set()
        for time in times:
            for wait in range(horizon + 1):
                arrival = time + step + wait
                if release.value(node) <= arrival <= deadline.value(node):
                    reachable.add(arrival)
        if not reachable:
            return False
        times = reachable
        previous = node
    return True


def _path(instance, order):
    walk = tour_walk(instance, list(order))
    return Walk(walk.items[:-2], instance.graph)


def _window_agreement(seed, n):
    horizon = 8
    instance = with_time_windows(random_complete(seed, n, high=4), seed, horizon=horizon, tight=0.7)
    variant = variant_of(WINDOWED_PATH)
    any_schedulable = False
    for order in permutations(instance.graph.nodes):
        schedulable = _schedulable(instance, order, horizon)
        any_schedulable = any_schedulable or schedulable
        assert validate(variant, instance, Solution(_path(instance, order))).feasible == schedulable
    result = brute_force(variant, instance)
    assert (result.status == OPTIMAL) == any_schedulable
    if result.solution is not None:
        order = walk_parts(result.solution.walk).visited_sequence
        if len(order) > 1 and order[-1] == order[0]:
            order = order[:-1]
        assert _schedulable(instance, order, horizon)


@settings(max_examples=50, deadline=None)
@given(seeds, st.integers(min_value=2, max_value=4))
def test_window_feasibility_matches_wait_enumeration(seed, n):
    _window_agreement(seed, n)


@pytest.mark.slow
@settings(max_examples=50, deadline=None)
@given(seeds, st.integers(min_value=2, max_value=6))
def test_window_feasibility_matches_wait_enumeration_up_to_six_nodes(seed, n):
    _window_agreement(seed, n)


def test_infinite_deadline_never_binds():
    instance = with_time_windows(random_complete(3, 3), 4, tight=0.0)
    assert all(instance.table('d').value(node) == INF for node in instance.graph.nodes)
    report = validate(variant_of(WINDOWED_PATH), instance, Solution(_path(instance, ['v1', 'v2', 'v3'])))
    assert report.feasible


@settings(max_examples=20, deadline=None)
@given(seeds, st.integers(min_value=2, max_value=5))
def test_open_windows_leave_the_optimum_unchanged(seed, n):
    instance = with_time_windows(random_complete(seed, n), seed, tight=0.0)
    windowed = brute_force(variant_of(WINDOWED_PATH), instance)
    plain = brute_force(variant_of(PLAIN_PATH), instance)
    assert windowed.status == plain.status == OPTIMAL
    assert windowed.value == plain.value
    assert str(windowed.solution.walk) == str(plain.solution.walk)


def test_cluster_may_wrap_around_a_circuit():
    instance = load_native(fixture_text('k4-clusters.t3i'))
    variant = variant_of(corpus_text('clustered-partition'))
    # cluster 1 is split by the closing edge only
    wrapped = _solution(instance, 'v1 e1_2 v2 e2_3 v3 e3_4 v4 e1_4 v1')
    assert validate(variant, instance, wrapped).feasible
    interrupted = _solution(instance, 'v1 e1_2 v2 e2_4 v4 e3_4 v3 e1_3 v1')
    report = validate(variant, instance, interrupted)
    assert [check.id for check in report.failures()] == ['cluster']


def test_cluster_on_an_open_walk_is_not_rotated():
    instance = load_native(fixture_text('k4-clusters.t3i'))
    text = "⟨ =1 ∣ =1 ∣ complete; undirected; partition ∣ c : E ↦ ℝ≥0 ∣ min c(S) ⟩"
    path = _solution(instance, 'v1 e1_2 v2 e2_3 v3 e3_4 v4')
    report = validate(variant_of(text), instance, path)
    assert [check.id for check in report.failures()] == ['cluster']
