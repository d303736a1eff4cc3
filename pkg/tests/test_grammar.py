#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import pytest

from core.errors import MissingFieldError, MixedNotationError, T3coSyntaxError
from grammar import LONGHAND, SHORTHAND, convert_notation, lint, parse, render
from semantics.resolver import resolve, resolved_equal

from .conftest import corpus_text, fixture_text

SHORT = "⟨ =1 ∣ =1 ∣ circuit; complete; undirected ∣ c : E ↦ ℝ≥0 ∣ min c(S) ⟩"
LONG = """⟨ α: count = 1;
  β: visits = 1;
  γ: start = False;
     end = False;
     circuit = True;
     complete = True;
     undirected = True;
  δ: c : E ↦ ℝ≥0;
  ε: min c(S);
⟩"""
ASCII = "< =1 | =1 | circuit; complete; undirected | c : E -> R>=0 | min c(S) >"


def test_notation_is_detected():
    assert parse(SHORT).notation == SHORTHAND
    assert parse(LONG).notation == LONGHAND


def test_five_fields_in_order():
    ast = parse(SHORT)
    assert [f.kind for f in ast.fields] == ['alpha', 'beta', 'gamma', 'delta', 'epsilon']


def test_canonical_text_is_a_fixpoint():
    for text in (SHORT, LONG):
        canonical = render(parse(text))
        assert render(parse(canonical)) == canonical


def test_parse_trees_ignore_spans():
    canonical = render(parse(SHORT))
    assert parse(canonical) == parse(SHORT)


def test_longhand_and_shorthand_resolve_equal():
    assert resolved_equal(resolve(parse(SHORT)), resolve(parse(LONG)))


def test_conversion_keeps_the_meaning():
    short = parse(SHORT)
    as_long = convert_notation(short, LONGHAND)
    assert as_long.notation == LONGHAND
    reparsed = parse(render(as_long))
    assert reparsed.notation == LONGHAND
    assert resolved_equal(resolve(reparsed), resolve(short))

    back = parse(render(parse(LONG), SHORTHAND))
    assert back.notation == SHORTHAND
    assert resolved_equal(resolve(back), resolve(short))


def test_ascii_aliases():
    assert resolved_equal(resolve(parse(ASCII)), resolve(parse(SHORT)))
    assert '∣' in render(parse(ASCII))


def test_requested_notation_is_enforced():
    with pytest.raises(T3coSyntaxError):
        parse(SHORT, LONGHAND)


def test_missing_field():
    with pytest.raises(MissingFieldError):
        parse(fixture_text('broken.t3co'))


def test_mixed_notation():
    with pytest.raises(MixedNotationError):
        parse("⟨ α: count = 1; ∣ =1 ∣ circuit ∣ c : E ↦ ℝ≥0 ∣ min c(S) ⟩")


def test_syntax_error_carries_location():
    with pytest.raises(T3coSyntaxError) as excinfo:
        parse("⟨ =1 ∣ =1 ∣ circuit ∣ c : E ↦ ℝ≥0 ∣ min c(S)")
    assert excinfo.value.span is not None
    assert excinfo.value.span.line == 1


def test_empty_text():
    with pytest.raises(T3coSyntaxError):
        parse("# only a comment\n")


def test_extension_annotations_survive_rendering():
    text = "⊕1: clusters are small\n⟨ =1 ∣ ≥1 ∣ circuit ∣ c : E ↦ ℝ≥0 ∣ min c(S) ⟩^{⊕1}"
    ast = parse(text)
    assert ast.extension is not None
    assert [a.text for a in ast.extension.annotations] == ['clusters are small']
    canonical = render(ast)
    assert canonical.startswith('⊕1: clusters are small')
    assert parse(canonical) == ast


def test_template_values_render_verbatim():
    text = corpus_text('standard-template')
    canonical = render(parse(text))
    assert '*' in canonical
    assert ' or ' in canonical
    assert render(parse(canonical)) == canonical


def test_lint_reports_duplicates():
    diagnostics = lint(parse("⟨ =1 ∣ ≥1; ≥1 ∣ circuit ∣ c : E ↦ ℝ≥0 ∣ min c(S) ⟩"))
    assert any(d.code == 'duplicate' for d in diagnostics)


def test_lint_is_quiet_on_clean_shorthand():
    assert lint(parse(SHORT)) == []
