#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Conversion between longhand and shorthand parse trees.

Shorthand drops the attribute name wherever the value alone identifies the
attribute, shows true booleans as bare names and omits false ones. Longhand
restores the names and states the start, end and circuit flags explicitly.
"""

from __future__ import annotations

from dataclasses import replace
from typing import List, Optional

from grammar.ast_nodes import (
    LONGHAND, SHORTHAND, Alternatives, Attribute, CostFunctionNode, FieldNode, Name, Num,
    VariantAst, Wildcard,
)

_FLAGS = ('start', 'end', 'circuit')


def _named(name: str, relation: str, value, span) -> Attribute:
    return Attribute(name, relation, value, span)


def _true(span) -> Name:
    return Name('True', span)


def _to_long(field_kind: str, attribute: Attribute) -> Optional[Attribute]:
    from semantics.registry import BOOLEAN
    from semantics.resolver import bind_attribute

    if attribute.name is not None:
        return attribute
    spec, relation, value = bind_attribute(field_kind, attribute)
    if spec.kind == BOOLEAN:
        return _named(spec.name, '=', _true(attribute.span), attribute.span)
    if spec.name in ('graphtype', 'edgetype') and isinstance(value, Name) and ' ' not in value.text:
        return _named(value.text, '=', _true(attribute.span), attribute.span)
    if relation is None:
        relation = '='
    return _named(spec.name, relation, value, attribute.span)


def _to_short(field_kind: str, attribute: Attribute) -> Optional[Attribute]:
    from semantics.registry import BOOLEAN, FALSE_WORDS, TRUE_WORDS
    from semantics.resolver import bind_attribute

    if attribute.name is None:
        return attribute
    if isinstance(attribute.value, (Wildcard, Alternatives)):
        return attribute
    spec, relation, value = bind_attribute(field_kind, attribute)
    if spec is None:
        return None
    if spec.kind == BOOLEAN:
        if isinstance(value, Name) and value.text in FALSE_WORDS:
            return None
        if isinstance(value, Name) and value.text in TRUE_WORDS:
            return Attribute(None, None, Name(spec.name, attribute.span), attribute.span)
        return attribute
    if spec.name == 'count' or spec.name == 'traversals':
        return Attribute(None, relation, value, attribute.span)
    if spec.name == 'visits' and relation in ('≥', '≤'):
        return Attribute(None, relation, value, attribute.span)
    if relation not in (None, '='):
        return attribute
    return Attribute(None, None, value, attribute.span)


def _convert_cost(node: CostFunctionNode, convert) -> CostFunctionNode:
    attributes = []
    for attribute in node.attributes:
        converted = convert('delta', attribute)
        if converted is not None:
            attributes.append(converted)
    return replace(node, attributes=tuple(attributes))


def _long_gamma(items: List[Attribute]) -> List[Attribute]:
    flags = {name: None for name in _FLAGS}
    rest = []
    for item in items:
        if item.name in _FLAGS:
            flags[item.name] = item
        else:
            rest.append(item)
    head = []
    for name in _FLAGS:
        head.append(flags[name] or Attribute(name, '=', Name('False')))
    return head + rest


def convert_notation(ast: VariantAst, notation: str) -> VariantAst:
    """
    Rewrite a parse tree for the other notation.

    Args:
        ast: tree in either notation
        notation: target notation

    Returns:
        VariantAst: tree whose canonical rendering is valid in the target notation

    Raises:
        ResolutionError: If an unnamed value cannot be attributed
        RegistryError: If a named attribute is unknown
    """
    if notation == ast.notation:
        return ast
    if notation not in (LONGHAND, SHORTHAND):
        raise ValueError(f"Unknown notation: {notation}")
    convert = _to_long if notation == LONGHAND else _to_short
    fields = []
    for node in ast.fields:
        if node.kind == 'epsilon':
            items = list(node.items)
        elif node.kind == 'delta':
            items = [_convert_cost(item, convert) for item in node.items]
        else:
            items = [converted for converted in (convert(node.kind, item) for item in node.items)
                     if converted is not None]
            if notation == LONGHAND and node.kind == 'gamma':
                items = _long_gamma(items)
            if notation == SHORTHAND and not items and node.items:
                items = [node.items[0]]
            if notation == LONGHAND and node.kind == 'alpha' and not items:
                items = [Attribute('count', '=', Num('1'))]
        fields.append(FieldNode(node.kind, tuple(items), None, node.span))
    return VariantAst(notation, tuple(fields), ast.extension, ast.span)
