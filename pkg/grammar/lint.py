#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Style and consistency warnings for parse trees.

Lint never raises: problems the resolver would reject are reported as
warnings so a whole file can be checked in one pass.
"""

from __future__ import annotations

from typing import Dict, List

from core.diagnostics import NOTE, WARNING, Diagnostic
from core.errors import T3coError
from grammar.ast_nodes import (
    Attribute, Chain, CostFunctionNode, Name, Num, SetLit, SetRange, VariantAst,
)
from grammar.render import render_attribute

_SET_NAMES = ('ℝ', 'ℤ', 'ℕ', 'ℚ', 'V', 'E', 'V_S', 'E_S')


def _is_set(expr) -> bool:
    if isinstance(expr, (SetLit, SetRange)):
        return True
    return isinstance(expr, Name) and (expr.text in _SET_NAMES or expr.text[:1] in 'ℝℤℕℚ')


def _membership(attribute: Attribute) -> List[Diagnostic]:
    found = []
    if attribute.relation == '∈' and not _is_set(attribute.value):
        found.append(attribute)
    value = attribute.value
    if isinstance(value, Chain):
        for relation, operand in zip(value.relations, value.operands[1:]):
            if relation == '∈' and not _is_set(operand):
                found.append(attribute)
    return [Diagnostic(WARNING, 'membership',
                       f"The ∈ relation should be used with a set: {render_attribute(item)!r}", item.span)
            for item in found]


def _attribute_checks(field_kind: str, attributes, seen: Dict[str, Attribute]) -> List[Diagnostic]:
    from semantics.registry import BOOLEAN
    from semantics.resolver import bind_attribute

    diagnostics: List[Diagnostic] = []
    for attribute in attributes:
        diagnostics.extend(_membership(attribute))
        try:
            spec, relation, value = bind_attribute(field_kind, attribute)
        except T3coError as e:
            diagnostics.append(Diagnostic(WARNING, 'unresolved', str(e), attribute.span))
            continue
        if spec is None:
            continue
        if attribute.name == 'visits' and spec.name == 'traversals':
            diagnostics.append(Diagnostic(
                NOTE, 'visits-numeric',
                f"Numeric value for visits is read as traversals: {render_attribute(attribute)!r}",
                attribute.span))
        if spec.kind == BOOLEAN and relation not in (None, '='):
            diagnostics.append(Diagnostic(
                WARNING, 'relation', f"{spec.name} is boolean and takes no {relation}", attribute.span))
        if spec.name == 'visits' and relation in ('<', '>', '∈'):
            diagnostics.append(Diagnostic(
                WARNING, 'relation', f"visits does not take the relation {relation}", attribute.span))
        if spec.name == 'traversals' and isinstance(value, Num) and relation == '<' and value.text == '0':
            diagnostics.append(Diagnostic(
                WARNING, 'relation', "traversals < 0 can never hold", attribute.span))
        key = f"{field_kind}.{spec.name}"
        if key in seen and field_kind != 'delta':
            previous = seen[key]
            same = render_attribute(previous) == render_attribute(attribute)
            message = (f"{spec.name} is given twice" if same else
                       f"{spec.name} is given twice with different values: "
                       f"{render_attribute(previous)!r} and {render_attribute(attribute)!r}")
            diagnostics.append(Diagnostic(WARNING, 'duplicate', message, attribute.span))
        else:
            seen[key] = attribute
    return diagnostics


def lint(ast: VariantAst) -> List[Diagnostic]:
    """
    Check a parse tree for duplicated attributes, misused relations and
    values the registry cannot place.

    Returns:
        list: Diagnostic entries, each located by the span of its entry
    """
    diagnostics: List[Diagnostic] = []
    for kind in ('alpha', 'beta', 'gamma'):
        diagnostics.extend(_attribute_checks(kind, ast.field(kind).items, {}))
    names: Dict[str, CostFunctionNode] = {}
    for node in ast.field('delta').items:
        diagnostics.extend(_attribute_checks('delta', node.attributes, {}))
        name = getattr(node.name, 'text', None) or getattr(node.name, 'base', '')
        if name in names:
            diagnostics.append(Diagnostic(WARNING, 'duplicate', f"Cost function {name} is declared twice", node.span))
        names[name] = node
    return diagnostics
