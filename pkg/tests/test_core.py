#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.costs import INF, NODES, CostFunction, complement_cost, format_value, lift_cost, parse_value
from core.errors import AmbiguityError, BindingError, WalkIndexError, WalkReferenceError
from core.graph import node_sort_key
from core.walk import (
    Walk, counted_traversals, is_closed, is_valid_walk, originating_proper_walk,
    parse_walk_text, traversals_count, visits_count, walk_parts,
)

from .strategies import connected_instances, walks_in

S1 = 'v1 e1 v2 e2 v3 e2 e3 v4 e4'
S2 = 'v1 e1 v2 e2 v3 e2 v2 e3 v4 e4'
S3 = 'v1 e1 v2 e2 v3 e2 e3 v4 e5'


def _walk(instance, text):
    return parse_walk_text(text, instance.graph)


def _cost(instance, text):
    walk = _walk(instance, text)
    return lift_cost(instance.table('c'), walk) + lift_cost(instance.table('p'), walk)


def test_edge_sequence_cost(worked_example):
    assert lift_cost(worked_example.table('c'), _walk(worked_example, S1)) == 8
    assert lift_cost(worked_example.table('c'), _walk(worked_example, S2)) == 8


def test_walk_costs_with_node_costs(worked_example):
    assert _cost(worked_example, S1) == 12
    assert _cost(worked_example, S2) == 13
    assert _cost(worked_example, S3) == 13


def test_edge_sequence_of_first_walk(worked_example):
    assert walk_parts(_walk(worked_example, S1)).edge_sequence == ('e1', 'e2', 'e2', 'e3', 'e4')


def test_first_walk_is_valid_and_closed(worked_example):
    walk = _walk(worked_example, S1)
    assert is_valid_walk(worked_example.graph, walk)
    assert is_closed(walk)
    parts = walk_parts(walk)
    assert parts.start() == 'v1'
    assert parts.end() == 'v1'


def test_edge_with_wrong_endpoints_is_not_a_walk(worked_example):
    assert not is_valid_walk(worked_example.graph, _walk(worked_example, 'v1 e2 v3'))


def test_unknown_id_is_reported(worked_example):
    with pytest.raises(WalkReferenceError) as excinfo:
        _walk(worked_example, 'v1 e9 v2')
    assert excinfo.value.ident == 'e9'


def test_originating_proper_walk_restores_dropped_node(worked_example):
    proper = originating_proper_walk(worked_example.graph, _walk(worked_example, S1))
    assert str(proper) == 'v1 e1 v2 e2 v3 e2 v2 e3 v4 e4 v1'


def test_originating_proper_walk_is_idempotent(worked_example):
    proper = originating_proper_walk(worked_example.graph, _walk(worked_example, S1))
    assert originating_proper_walk(worked_example.graph, proper) == proper


def test_visits_and_traversals_differ(worked_example):
    walk = _walk(worked_example, S1)
    assert visits_count(walk, 'v2') == 1
    assert traversals_count(walk, 'v2') == 2
    assert visits_count(_walk(worked_example, S2), 'v2') == 2


def test_edge_only_walk_between_two_nodes_is_ambiguous(worked_example):
    walk = Walk.from_ids(['e1'], worked_example.graph)
    with pytest.raises(AmbiguityError):
        originating_proper_walk(worked_example.graph, walk)


def test_visited_prefixes(worked_example):
    parts = walk_parts(_walk(worked_example, S2))
    assert parts.visited_sequence == ('v1', 'v2', 'v3', 'v2', 'v4')
    assert parts.visited_at(3) == 'v2'
    assert str(parts.prefix_upto(0)) == 'v1'
    assert parts.prefix_before(1).edge_ids == ('e1',)
    with pytest.raises(WalkIndexError):
        parts.visited_at(5)


def test_complement_cost(worked_example):
    assert complement_cost(worked_example.table('p'), _walk(worked_example, S1)) == 0
    assert complement_cost(worked_example.table('p'), _walk(worked_example, 'v1 e1 v2')) == 2


def test_missing_value_is_a_binding_error(worked_example):
    partial = CostFunction('p', NODES, {'v1': Fraction(1)})
    with pytest.raises(BindingError):
        lift_cost(partial, _walk(worked_example, S1))


def test_value_text():
    assert parse_value('3/2') == Fraction(3, 2)
    assert parse_value('0.25') == Fraction(1, 4)
    assert parse_value('inf') == INF
    assert format_value(Fraction(6, 4)) == '3/2'
    assert format_value(Fraction(4)) == '4'
    assert format_value(INF) == 'inf'


def test_natural_node_order():
    assert sorted(['v10', 'v2', 'v1'], key=node_sort_key) == ['v1', 'v2', 'v10']
    assert sorted(['10', '9', '1'], key=node_sort_key) == ['1', '9', '10']


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_visits_never_exceed_traversals(data):
    instance = data.draw(connected_instances(max_nodes=5))
    walk = data.draw(walks_in(instance, max_edges=6))
    traversed = counted_traversals(walk)
    for node in instance.graph.nodes:
        assert visits_count(walk, node) <= traversed.count(node)


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_traversal_total_matches_edge_count(data):
    instance = data.draw(connected_instances(max_nodes=5))
    walk = data.draw(walks_in(instance, max_edges=6))
    edges = len(walk.edge_ids)
    expected = edges if is_closed(walk) else edges + 1
    assert len(counted_traversals(walk)) == expected


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_complement_identity(data):
    instance = data.draw(connected_instances(max_nodes=5, node_costs=True))
    walk = data.draw(walks_in(instance, max_edges=6))
    p = instance.table('p')
    visited = set(walk_parts(walk).visited_set)
    assert sum(p.values[v] for v in visited) + complement_cost(p, walk) == sum(p.values.values())


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_edge_cost_is_additive_over_concatenation(data):
    instance = data.draw(connected_instances(max_nodes=5))
    walk = data.draw(walks_in(instance, max_edges=6))
    c = instance.table('c')
    split = data.draw(st.integers(min_value=0, max_value=len(walk.edge_ids)))
    head = Walk(tuple(walk.items[:2 * split + 1]), instance.graph)
    tail = Walk(tuple(walk.items[2 * split:]), instance.graph)
    assert lift_cost(c, walk) == lift_cost(c, head) + lift_cost(c, tail)
