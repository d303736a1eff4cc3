#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import shutil

import pytest

from catalog import CONFIRMED, FAMILIES, LOWER, UPPER, Bound, CatalogManager
from core.errors import CatalogError
from semantics.objectives import MaxMinEdge
from semantics.resolver import resolved_equal


@pytest.fixture(scope='module')
def catalog():
    return CatalogManager()


def test_corpus_size(catalog):
    entries = catalog.list()
    assert len(entries) >= 60
    assert [entry.id for entry in entries] == sorted(entry.id for entry in entries)
    assert {entry.family for entry in entries} == set(FAMILIES)


def test_metric_tsp_bounds(catalog):
    entry = catalog.get('standard-metric')
    assert entry.family == 'standard'
    lower, = entry.bounds_of(LOWER)
    upper, = entry.bounds_of(UPPER)
    assert (lower.expression, lower.citation, lower.confirmed) == ('123/122', 'KLS2015', True)
    assert upper.expression == '3/2 − 10⁻³⁶'
    assert upper.confirmed is False


def test_max_scatter_is_tight(catalog):
    entry = catalog.get('max-scatter-triangle')
    assert [b.expression for b in entry.bounds_of(LOWER)] == ['2']
    assert [b.expression for b in entry.bounds_of(UPPER)] == ['2']
    assert isinstance(entry.resolve().objectives[0], MaxMinEdge)


def test_reference_only_rows_keep_a_note(catalog):
    entry = catalog.get('path-metric')
    assert entry.bounds == ()
    assert 'zenklusen2019' in entry.note


def test_unmarked_bounds(catalog):
    for bound in catalog.get('bottleneck-triangle').bounds:
        assert bound.confirmed is None
        assert bound.citation == 'PR1984'


def test_notations_resolve_equal(catalog):
    longhand = catalog.get('standard-longhand')
    shorthand = catalog.get('standard-shorthand')
    assert longhand.same_as == shorthand.id
    assert longhand.notation != shorthand.notation
    assert resolved_equal(longhand.resolve(), shorthand.resolve())


def test_pairs_point_at_each_other(catalog):
    entry = catalog.get('standard-triangle')
    partner = catalog.get(entry.pair)
    assert partner.pair == entry.id
    assert not resolved_equal(entry.resolve(), partner.resolve())
    assert entry.note


def test_family_listing(catalog):
    entries = catalog.list('max-scatter')
    assert entries
    assert all(entry.family == 'max-scatter' for entry in entries)


def test_unknown_family(catalog):
    with pytest.raises(CatalogError):
        catalog.list('vehicle-routing')


def test_unknown_id(catalog):
    with pytest.raises(CatalogError):
        catalog.get('no-such-entry')


@pytest.mark.slow
def test_corpus_verifies_clean(catalog):
    assert catalog.verify_corpus() == []


def test_bound_text():
    bound = Bound.from_text("upper ; 3/2 ; christofides1976 ; confirmed")
    assert bound == Bound(UPPER, '3/2', 'christofides1976', True)
    assert str(bound) == f"upper ; 3/2 ; christofides1976 ; {CONFIRMED}"
    assert Bound.from_text("lower ; 2") == Bound(LOWER, '2')


@pytest.mark.parametrize('text', ["upper", "middle ; 2", "lower ; 2 ; x ; maybe"])
def test_malformed_bounds(text):
    with pytest.raises(CatalogError):
        Bound.from_text(text)


def test_missing_index(tmp_path):
    with pytest.raises(CatalogError):
        CatalogManager(tmp_path).list()


def test_broken_entries_are_reported(tmp_path):
    shutil.copy(CatalogManager().corpus_dir / 'standard-metric.t3co', tmp_path / 'standard-metric.t3co')
    (tmp_path / 'index.toml').write_text(
        '[[entry]]\nid = "standard-metric"\nfamily = "standard"\n\n'
        '[[entry]]\nid = "standard-gone"\nfamily = "standard"\n\n'
        '[[entry]]\nid = "standard-metric"\nfamily = "standard"\n'
        'pair = "standard-gone"\n',
        encoding='utf-8',
    )
    manager = CatalogManager(tmp_path)
    assert [entry.id for entry in manager.list()] == ['standard-metric']
    codes = [d.code for d in manager.verify_corpus()]
    assert codes.count('index') == 2


def test_pair_that_does_not_point_back(tmp_path):
    corpus = CatalogManager().corpus_dir
    for name in ('standard-walk', 'standard-triangle', 'standard-metric'):
        shutil.copy(corpus / f"{name}.t3co", tmp_path / f"{name}.t3co")
    (tmp_path / 'index.toml').write_text(
        '[[entry]]\nid = "standard-walk"\nfamily = "standard"\npair = "standard-triangle"\n\n'
        '[[entry]]\nid = "standard-triangle"\nfamily = "standard"\npair = "standard-metric"\n\n'
        '[[entry]]\nid = "standard-metric"\nfamily = "standard"\n',
        encoding='utf-8',
    )
    diagnostics = CatalogManager(tmp_path).verify_corpus()
    assert {(d.code, d.source) for d in diagnostics} >= {('pair', 'standard-walk')}
