#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from dataclasses import replace
from fractions import Fraction
from itertools import combinations, permutations, product

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.errors import PreconditionError
from core.walk import EdgeStep, NodeVisit, Walk, walk_parts
from instances import load_native, load_tsplib, metric_closure, pair_costs
from instances.generators import (
    collinear, random_connected, random_metric, unit_complete, with_purchase_tables,
)
from solvers import (
    LIMIT_EXCEEDED, OPTIMAL, SolveLimits, brute_force, christofides, double_tree,
    min_weight_perfect_matching, nearest_neighbor, ratio_check, synthesize_shares, tour_walk,
)
from validator import Solution, validate

from .conftest import corpus_text, fixture_text, variant_of
from .strategies import connected_instances, metric_instances, seeds


def test_walk_variant_optimum_on_worked_example(worked_example, fixture_variant):
    variant = fixture_variant('walk-circuit.t3co')
    for use_closure in (True, False):
        result = brute_force(variant, worked_example, use_closure=use_closure)
        assert result.status == OPTIMAL
        assert result.value == 8
        assert validate(variant, worked_example, result.solution).feasible


def test_exactly_once_has_no_tour_on_worked_example(worked_example, fixture_variant):
    # v3 hangs off v2 alone, so no circuit meets every node once
    result = brute_force(fixture_variant('hamiltonian-circuit.t3co'), worked_example)
    assert result.status == 'infeasible'
    assert result.solution is None


def test_unit_square_tour():
    result = brute_force(variant_of(fixture_text('metric.t3co')), unit_complete(4))
    assert result.status == OPTIMAL
    assert result.value == 4


def test_quota_met_by_full_tour(fixture_variant):
    instance = load_native(fixture_text('k4-quota.t3i'))
    result = brute_force(fixture_variant('quota.t3co'), instance)
    assert result.status == OPTIMAL
    assert result.value == 4
    assert len(result.solution.walk.edge_ids) == 4


def test_too_many_nodes():
    result = brute_force(variant_of(fixture_text('metric.t3co')), unit_complete(5), SolveLimits(max_nodes=4))
    assert result.status == LIMIT_EXCEEDED
    assert result.solution is None


def test_results_do_not_depend_on_workers():
    instance = random_metric(11, 6)
    variant = variant_of(fixture_text('metric.t3co'))
    single = brute_force(variant, instance)
    pooled = brute_force(variant, instance, SolveLimits(workers=3))
    assert single.value == pooled.value
    assert str(single.solution.walk) == str(pooled.solution.walk)
    assert str(brute_force(variant, instance).solution.walk) == str(single.solution.walk)


def test_progress_reports_every_chunk():
    calls = []
    brute_force(variant_of(fixture_text('metric.t3co')), random_metric(2, 5),
                progress=lambda done, total: calls.append((done, total)))
    assert calls
    assert calls[-1][0] == calls[-1][1]


@pytest.mark.parametrize('field, value', [
    ('max_nodes', 0), ('max_walk_edges', -1), ('time_budget', 0), ('workers', 0),
])
def test_limits_reject_non_positive_values(field, value):
    with pytest.raises(ValueError, match='Configuration error'):
        SolveLimits(**{field: value})


@settings(max_examples=20, deadline=None)
@given(seeds, st.integers(min_value=1, max_value=20), st.integers(min_value=1, max_value=4))
def test_scaling_costs_keeps_the_optimal_tour(seed, numerator, denominator):
    factor = Fraction(numerator, denominator)
    instance = random_metric(seed, 5)
    variant = variant_of(fixture_text('metric.t3co'))
    plain = brute_force(variant, instance)
    scaled = brute_force(variant, instance.scaled(factor))
    assert str(scaled.solution.walk) == str(plain.solution.walk)
    assert scaled.value == factor * plain.value


@settings(max_examples=20, deadline=None)
@given(connected_instances(min_nodes=2, max_nodes=5), st.fractions(min_value=Fraction(1, 8), max_value=8))
def test_scaling_costs_keeps_the_optimal_walk(instance, factor):
    variant = variant_of(fixture_text('walk-circuit.t3co'))
    plain = brute_force(variant, instance)
    scaled = brute_force(variant, instance.scaled(factor))
    assert str(scaled.solution.walk) == str(plain.solution.walk)
    assert scaled.value == factor * plain.value


def test_nearest_neighbor_on_explicit_matrix():
    instance = load_tsplib(fixture_text('k3.tsp'))
    solution = nearest_neighbor(instance)
    report = validate(variant_of(fixture_text('metric.t3co')), instance, solution)
    assert str(solution.walk) == '1 e1_2 2 e2_3 3 e1_3 1'
    assert report.value(0) == 7


def test_double_tree_on_points_along_a_line():
    instance = load_tsplib(fixture_text('collinear.tsp'))
    report = validate(variant_of(fixture_text('metric.t3co')), instance, double_tree(instance))
    assert report.feasible
    assert report.value(0) == 4


def test_tree_heuristics_need_metric_costs():
    instance = load_tsplib(fixture_text('k3.tsp'))
    with pytest.raises(PreconditionError):
        double_tree(instance)
    with pytest.raises(PreconditionError):
        christofides(instance)


def test_tour_heuristics_need_complete_graphs(worked_example):
    with pytest.raises(PreconditionError):
        nearest_neighbor(worked_example)


def test_christofides_needs_three_nodes():
    with pytest.raises(PreconditionError):
        christofides(collinear([0, 1]))


def test_christofides_on_a_line_is_optimal():
    instance = collinear([0, 1, 3, 7])
    variant = variant_of(fixture_text('metric.t3co'))
    assert validate(variant, instance, christofides(instance)).value(0) == 14


def _tree_weight(instance):
    pairs = pair_costs(instance)
    complete = nx.Graph()
    nodes = instance.graph.sorted_nodes()
    for i, u in enumerate(nodes):
        for v in nodes[i + 1:]:
            complete.add_edge(u, v, weight=pairs[(u, v)])
    return sum((data['weight'] for _, _, data in nx.minimum_spanning_edges(complete, data=True)), Fraction(0))


def test_christofides_with_many_odd_tree_nodes():
    instance = random_metric(7, 60)
    solution = christofides(instance)
    report = validate(variant_of(fixture_text('metric.t3co')), instance, solution)
    assert report.feasible
    assert walk_parts(solution.walk).visited_set == frozenset(instance.graph.nodes)
    # tree plus a matching of at most half the optimum, itself at most twice the tree
    assert report.value(0) <= 2 * _tree_weight(instance)


def _matching_weight(pairs, weight):
    return sum((weight(u, v) for u, v in pairs), Fraction(0))


def _best_matching(nodes, weight):
    if not nodes:
        return Fraction(0)
    first, rest = nodes[0], nodes[1:]
    return min(weight(first, other) + _best_matching([v for v in rest if v != other], weight)
               for other in rest)


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=1, max_value=4), st.data())
def test_matching_is_minimum(half, data):
    nodes = [f"v{i}" for i in range(1, 2 * half + 1)]
    costs = {pair: data.draw(st.fractions(min_value=0, max_value=20, max_denominator=6))
             for pair in combinations(nodes, 2)}

    def weight(u, v):
        return costs[(u, v)] if (u, v) in costs else costs[(v, u)]

    pairs = min_weight_perfect_matching(nodes, weight)
    assert sorted(node for pair in pairs for node in pair) == sorted(nodes)
    assert _matching_weight(pairs, weight) == _best_matching(nodes, weight)


def test_matching_covers_large_node_sets():
    nodes = [f"v{i}" for i in range(1, 41)]
    pairs = min_weight_perfect_matching(nodes, lambda u, v: abs(int(u[1:]) - int(v[1:])))
    assert len(pairs) == 20
    assert pairs[0] == ('v1', 'v2')
    assert _matching_weight(pairs, lambda u, v: abs(int(u[1:]) - int(v[1:]))) == 20


def test_matching_rejects_odd_sets():
    with pytest.raises(PreconditionError):
        min_weight_perfect_matching(['v1', 'v2', 'v3'], lambda u, v: 1)


def _closure_equivalence(seed, n):
    instance = random_connected(seed, n, low=1)
    walks = variant_of(fixture_text('walk-circuit.t3co'))
    tours = variant_of(fixture_text('hamiltonian-circuit.t3co'))
    # an optimal walk uses no edge more than twice
    limits = SolveLimits(max_walk_edges=2 * len(instance.graph.edges))
    direct = brute_force(walks, instance, limits, use_closure=False)
    closed = brute_force(tours, metric_closure(instance))
    assert direct.status == closed.status == OPTIMAL
    assert direct.value == closed.value
    assert brute_force(walks, instance).value == direct.value


@settings(max_examples=20, deadline=None)
@given(seeds, st.integers(min_value=2, max_value=4))
def test_at_least_once_equals_exactly_once_on_the_closure(seed, n):
    _closure_equivalence(seed, n)


@pytest.mark.slow
@settings(max_examples=100, deadline=None)
@given(seeds, st.integers(min_value=2, max_value=7))
def test_at_least_once_equals_exactly_once_on_the_closure_up_to_seven_nodes(seed, n):
    _closure_equivalence(seed, n)


def _tree_ratios(instance):
    variant = variant_of(fixture_text('metric.t3co'))
    oracle = brute_force(variant, instance)
    assert oracle.status == OPTIMAL
    assert ratio_check(variant, instance, double_tree(instance), 2, oracle=oracle).holds
    check = ratio_check(variant, instance, christofides(instance), Fraction(3, 2), oracle=oracle)
    assert check.holds
    assert check.optimum == oracle.value


@settings(max_examples=15, deadline=None)
@given(metric_instances(min_nodes=3, max_nodes=6))
def test_tree_heuristics_stay_within_their_ratios(instance):
    _tree_ratios(instance)


@pytest.mark.slow
@settings(max_examples=50, deadline=None)
@given(metric_instances(min_nodes=4, max_nodes=9))
def test_tree_heuristics_stay_within_their_ratios_up_to_nine_nodes(instance):
    _tree_ratios(instance)


def test_ratio_violation_is_reported():
    instance = random_metric(5, 5)
    variant = variant_of(fixture_text('metric.t3co'))
    oracle = brute_force(variant, instance)
    worst = max((solution for solution in _all_tours(instance)),
                key=lambda solution: validate(variant, instance, solution).value(0))
    if validate(variant, instance, worst).value(0) > oracle.value:
        assert ratio_check(variant, instance, worst, 1, oracle=oracle).status == 'violated'
    assert ratio_check(variant, instance, oracle.solution, 1, oracle=oracle).holds


def _all_tours(instance):
    first, *rest = instance.graph.sorted_nodes()
    for order in permutations(rest):
        yield Solution(tour_walk(instance, [first, *order]))


def test_ratio_is_inconclusive_without_an_oracle_optimum():
    instance = random_metric(3, 5)
    variant = variant_of(fixture_text('metric.t3co'))
    check = ratio_check(variant, instance, double_tree(instance), 2, limits=SolveLimits(max_nodes=4))
    assert check.status == 'inconclusive'
    assert not check


def _purchase_optimum(instance):
    pairs = pair_costs(instance)
    others = [node for node in instance.graph.sorted_nodes() if node != instance.start_node]
    best = None
    for size in range(len(others) + 1):
        for chosen in combinations(others, size):
            stops = [instance.start_node, *chosen]
            tour = min(
                (sum((pairs[(u, v)] for u, v in zip(route, route[1:] + (route[0],))), Fraction(0))
                 for route in ((instance.start_node, *rest) for rest in permutations(chosen))),
                default=Fraction(0),
            ) if chosen else Fraction(0)
            spend = Fraction(0)
            for index in range(1, instance.product_count() + 1):
                need = instance.param(f"d_{index}")
                prices = instance.table(f"price_{index}")
                avail = instance.table(f"avail_{index}")
                for node in sorted(stops, key=prices.value):
                    amount = min(need, avail.value(node))
                    spend += amount * prices.value(node)
                    need -= amount
                if need > 0:
                    spend = None
                    break
            if spend is not None and (best is None or tour + spend < best):
                best = tour + spend
    return best


def _purchase_instance(seed, n, products):
    instance = with_purchase_tables(random_metric(seed, n), seed, products=products, max_avail=2)
    return replace(instance, start_node='v1')


@settings(max_examples=15, deadline=None)
@given(seeds, st.integers(min_value=2, max_value=4))
def test_purchasing_optimum(seed, n):
    instance = _purchase_instance(seed, n, 2)
    variant = variant_of(corpus_text('purchaser-sparse'))
    result = brute_force(variant, instance)
    assert result.status == OPTIMAL
    assert result.value == _purchase_optimum(instance)
    assert validate(variant, instance, result.solution).feasible


def test_shares_cover_demand_from_cheapest_markets():
    instance = with_purchase_tables(random_metric(4, 4), 4, products=1, max_avail=3)
    instance = replace(instance, start_node='v1')
    variant = variant_of(corpus_text('purchaser-sparse'))
    walk = nearest_neighbor(instance).walk
    shares = synthesize_shares(variant, instance, walk)
    demand = instance.param('d_1')
    assert sum(shares.values()) == demand
    avail = instance.table('avail_1')
    assert all(amount <= avail.value(node) for (_, node), amount in shares.items())


def _grid_spend(instance, markets, index):
    """Cheapest purchase of one product over every integer share vector at the markets."""
    need = instance.param(f"d_{index}")
    prices = instance.table(f"price_{index}")
    avail = instance.table(f"avail_{index}")
    best = None
    for amounts in product(*(range(int(avail.value(node)) + 1) for node in markets)):
        if sum(amounts) != need:
            continue
        spend = sum((amount * prices.value(node) for amount, node in zip(amounts, markets)), Fraction(0))
        if best is None or spend < best:
            best = spend
    return best


@pytest.mark.slow
@settings(max_examples=30, deadline=None)
@given(seeds, st.integers(min_value=2, max_value=6), st.integers(min_value=1, max_value=3))
def test_greedy_shares_match_grid_enumeration(seed, n, products):
    instance = _purchase_instance(seed, n, products)
    variant = variant_of(corpus_text('purchaser-sparse'))
    result = brute_force(variant, instance)
    assert result.status == OPTIMAL
    walk = result.solution.walk
    markets = sorted(walk_parts(walk).visited_set)
    shares = synthesize_shares(variant, instance, walk)
    for index in range(1, products + 1):
        prices = instance.table(f"price_{index}")
        greedy = sum((amount * prices.value(node) for (which, node), amount in shares.items() if which == index),
                     Fraction(0))
        assert greedy == _grid_spend(instance, markets, index)


def _walks_up_to(instance, max_edges):
    """Every walk with at most ``max_edges`` edges, repeated nodes passed except a closing return."""
    graph = instance.graph

    def grow(nodes, edges):
        closing = bool(edges) and nodes[-1] == nodes[0]
        items, seen = [], set()
        for index, node in enumerate(nodes):
            if index:
                items.append(EdgeStep(edges[index - 1]))
            items.append(NodeVisit(node, node not in seen or (closing and index == len(nodes) - 1)))
            seen.add(node)
        yield Walk(tuple(items), graph)
        if len(edges) < max_edges:
            for edge in graph.edges:
                reached = graph.traverse(edge.id, nodes[-1])
                if reached is not None:
                    yield from grow(nodes + [reached], edges + [edge.id])

    for start in graph.sorted_nodes():
        yield from grow([start], [])


@pytest.mark.parametrize('max_edges', [6, pytest.param(8, marks=pytest.mark.slow)])
@pytest.mark.parametrize('seed', [None, 3, 17, 40])
def test_oracle_agrees_with_validator_on_small_walks(worked_example, fixture_variant, seed, max_edges):
    instance = worked_example if seed is None else random_connected(seed, 4, low=1)
    variants = [fixture_variant(name) for name in ('walk-circuit.t3co', 'hamiltonian-circuit.t3co')]
    values = [[] for _ in variants]
    for walk in _walks_up_to(instance, max_edges):
        for variant, found in zip(variants, values):
            report = validate(variant, instance, Solution(walk))
            if report.feasible:
                found.append(report.value(0))
    for variant, found in zip(variants, values):
        result = brute_force(variant, instance, SolveLimits(max_walk_edges=max_edges), use_closure=False)
        if found:
            assert result.status == OPTIMAL
            assert result.value == min(found)
        else:
            assert result.status == 'infeasible'
