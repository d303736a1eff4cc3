#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import pytest

from core.diagnostics import ERROR, NOTE
from core.errors import UnsupportedObjectiveError
from grammar.parser import parse
from semantics import (
    LowerBound, MaxMinEdge, MinMaxEdge, Minimize, TimeWindow,
    check_wellformed, explain, resolve, resolved_equal,
)

from .conftest import corpus_text, fixture_text, variant_of


def test_shorthand_values_find_their_attributes():
    variant = variant_of("⟨ =1 ∣ ≥1 ∣ circuit; undirected ∣ c : E ↦ ℝ≥0 ∣ min c(S) ⟩")
    assert variant.count.is_single()
    assert variant.traversal.label() == '≥1'
    assert variant.tour.circuit
    assert not variant.tour.start
    assert variant.tour.edgetype == 'undirected'
    assert variant.cost_names() == ('c',)
    assert isinstance(variant.objectives[0], Minimize)


def test_numeric_visits_mean_traversals():
    longhand = variant_of(corpus_text('standard-longhand'))
    assert longhand.traversal.label() == '=1'


def test_order_of_values_does_not_matter():
    a = variant_of("⟨ =1 ∣ =1 ∣ circuit; complete; undirected ∣ c : E ↦ ℝ≥0 ∣ min c(S) ⟩")
    b = variant_of("⟨ =1 ∣ =1 ∣ undirected; complete; circuit ∣ c : E ↦ ℝ≥0 ∣ min c(S) ⟩")
    assert resolved_equal(a, b)


def test_different_traversals_resolve_differently():
    a = variant_of("⟨ =1 ∣ =1 ∣ circuit ∣ c : E ↦ ℝ≥0 ∣ min c(S) ⟩")
    b = variant_of("⟨ =1 ∣ ≥1 ∣ circuit ∣ c : E ↦ ℝ≥0 ∣ min c(S) ⟩")
    assert not resolved_equal(a, b)


def test_edge_aggregates():
    bottleneck = variant_of(corpus_text('bottleneck-triangle'))
    scatter = variant_of(corpus_text('max-scatter-triangle'))
    assert isinstance(bottleneck.objectives[0], MinMaxEdge)
    assert isinstance(scatter.objectives[0], MaxMinEdge)


def test_quota_is_a_lower_bound(fixture_variant):
    variant = fixture_variant('quota.t3co')
    assert isinstance(variant.objectives[0], LowerBound)
    assert variant.objectives[0].is_constraint


def test_time_windows_are_recognized():
    variant = variant_of(corpus_text('time-windows-makespan'))
    assert any(isinstance(statement, TimeWindow) for statement in variant.objectives)


def test_unsupported_objective():
    with pytest.raises(UnsupportedObjectiveError):
        resolve(parse("⟨ =1 ∣ =1 ∣ circuit ∣ c : E ↦ ℝ≥0 ∣ min min {c(e) : e ∈ E_S} ⟩"))


def test_unhoused_symbol(fixture_variant):
    diagnostics = check_wellformed(fixture_variant('unhoused.t3co'))
    assert [d.code for d in diagnostics if d.severity == ERROR] == ['unhoused-symbol']


def test_clean_definition_has_no_findings(fixture_variant):
    assert check_wellformed(fixture_variant('walk-circuit.t3co')) == []


def test_several_travelers_are_flagged():
    variant = variant_of("⟨ =2 ∣ ≥1 ∣ circuit ∣ c : E ↦ ℝ≥0 ∣ min c(S) ⟩")
    assert not variant.count.is_single()
    assert any(d.code == 'traveler-count' for d in check_wellformed(variant))


def test_templates_record_open_attributes():
    variant = variant_of(corpus_text('standard-template'))
    assert variant.is_template
    names = {item.name for item in variant.open_attributes}
    assert 'traversals' in names
    assert any(d.severity == NOTE and d.code == 'template' for d in check_wellformed(variant))


def test_explain_lists_every_field(fixture_variant):
    text = explain(fixture_variant('quota.t3co'))
    for title in ('α traveler', 'β targets', 'γ tour', 'δ costs', 'ε objectives'):
        assert title in text
    assert 'count' in text
    assert 'LowerBound' in text


def test_explain_shows_group_parameters():
    text = explain(variant_of(corpus_text('generalized-partition-once')))
    assert 'partition(once' in text
