#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Attribute registry.

One entry per attribute of the α, β and γ fields plus the attributes that
may follow a cost function in the δ field. Each entry knows which unnamed
value forms it owns, so a shorthand value resolves to exactly one attribute
of its field.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from core.errors import RegistryError
from grammar.ast_nodes import (
    Alternatives, Call, Chain, Expr, Name, Num, Paren, RelValue, SetLit, Wildcard,
)

BOOLEAN = 'boolean'
EXPRESSION = 'expression'
TAGGED = 'tagged'

TRUE_WORDS = ('True', 'true', 'TRUE')
FALSE_WORDS = ('False', 'false', 'FALSE')

VISIT_WORDS = ('always', 'once')
GROUP_WORDS = ('partition', 'cover', 'bipartition', 'k-partition')
COVERING_WORDS = ('all', 'subset')
GRAPHTYPE_WORDS = ('complete', 'strongly connected', 'planar', 'path', 'cycle', 'binary tree', 'tree')
EDGETYPE_WORDS = ('undirected', 'directed', 'bidirected')
PRECEDENCE_WORDS = ('atomic', 'arbitrary')
CLUSTER_WORDS = ('partition', 'cover')
CLUSTER_ORDER_WORDS = ('ordered', 'unordered')
CLUSTER_SEQUENCE_WORDS = ('start', 'startend', 'terminals')
PROPERTY_WORDS = ('metric', 'graphic', 'planar', 'subset planar', 'euclidean', 'euclid',
                  'euclidean fixed dim', 'euclidean plane', 'grid', 'shoreline')
PARAM_WORDS = ('identity', 'symmetric', 'symmetry', 'triangle')
TEMPORAL_WORDS = ('time', 'position', 'costzone', 'poszone', 'waiting', 'kinetic')
TRAVERSAL_SYMBOLS = ('d', 'd_v', 'd(v)')

_SCALED_TRIANGLE = re.compile(r'^(.+)-triangle$')
_INDEXED = re.compile(r'^(\w+)_(t|\{t\})$')


def head_word(expr: Optional[Expr]) -> Optional[str]:
    """The leading word of a value: ``partition`` for partition(once)."""
    if isinstance(expr, Name):
        return expr.text
    if isinstance(expr, Call) and isinstance(expr.func, Name):
        return expr.func.text
    return None


def is_scaled_triangle(word: Optional[str]) -> bool:
    return bool(word) and bool(_SCALED_TRIANGLE.match(word)) and word != 'triangle'


def scaled_triangle_symbol(word: str) -> str:
    return _SCALED_TRIANGLE.match(word).group(1)


def is_param_word(word: Optional[str]) -> bool:
    return word in PARAM_WORDS or is_scaled_triangle(word)


def is_traversal_amount(expr: Expr) -> bool:
    """Numbers, d, d_v and d(v), optionally refined by ``∈ {…}``."""
    if isinstance(expr, Num):
        return True
    if isinstance(expr, Name):
        return expr.text in ('d', 'd_v')
    if isinstance(expr, Call):
        return (isinstance(expr.func, Name) and expr.func.text == 'd'
                and len(expr.args) == 1 and isinstance(expr.args[0], Name) and expr.args[0].text == 'v')
    if isinstance(expr, Chain):
        return (len(expr.relations) == 1 and expr.relations[0] == '∈'
                and is_traversal_amount(expr.operands[0]) and isinstance(expr.operands[1], SetLit))
    return False


# unnamed value predicates, one per attribute

def _count_form(relation, value):
    return relation is not None or isinstance(value, Num)


def _traversals_form(relation, value):
    if relation is None:
        return isinstance(value, Name) and value.text == 'd_v'
    return relation in ('=', '≤', '<', '≥', '>') and is_traversal_amount(value)


def _visits_form(relation, value):
    return relation in (None, '=', '≥', '≤') and isinstance(value, Name) and value.text in VISIT_WORDS


def _group_form(relation, value):
    return relation in (None, '=') and head_word(value) in GROUP_WORDS


def _covering_form(relation, value):
    return relation in (None, '=') and isinstance(value, Call) and head_word(value) in COVERING_WORDS


def _bare(word):
    def predicate(relation, value):
        return relation is None and isinstance(value, Name) and value.text == word
    return predicate


def _words(words, calls=()):
    def predicate(relation, value):
        if relation not in (None, '='):
            return False
        if isinstance(value, Name):
            return value.text in words
        return isinstance(value, Call) and head_word(value) in calls
    return predicate


def _property_form(relation, value):
    if relation not in (None, '='):
        return False
    if isinstance(value, Paren):
        return all(is_param_word(head_word(item)) for item in value.items)
    word = head_word(value)
    if isinstance(value, Call):
        return word == 'grid'
    return word in PROPERTY_WORDS or is_param_word(word)


def _temporal_form(relation, value):
    if relation not in (None, '='):
        return False
    word = head_word(value)
    if isinstance(value, Call):
        return word in ('costzone', 'poszone')
    return word in ('time', 'position', 'waiting', 'kinetic')


@dataclass(frozen=True)
class AttributeSpec:
    """
    One registry entry.

    Attributes:
        field: 'alpha' .. 'gamma', or 'delta' for cost function attributes
        name: attribute name as written in longhand
        kind: 'boolean', 'expression' or 'tagged'
        default: value assumed when the attribute is absent
        meaning: one-line description used by explain
        words: tagged value words this attribute owns in its field
    """
    field: str
    name: str
    kind: str
    default: str
    meaning: str
    words: Tuple[str, ...] = ()
    accepts: Callable = field(default=None, compare=False, repr=False)

    def owns(self, relation: Optional[str], value: Expr) -> bool:
        return bool(self.accepts and self.accepts(relation, value))


_SPECS = (
    AttributeSpec('alpha', 'count', EXPRESSION, '=1',
                  'number of travelers, i.e. of visiting sequences a solution consists of',
                  accepts=_count_form),
    AttributeSpec('beta', 'traversals', EXPRESSION, '≥0',
                  'how often every node is passed by the walk',
                  accepts=_traversals_form),
    AttributeSpec('beta', 'visits', TAGGED, 'default',
                  'how often a traversed node occurs in the solution sequence',
                  VISIT_WORDS, _visits_form),
    AttributeSpec('beta', 'group', TAGGED, 'none',
                  'nodes form groups and one or at least one node per group is visited',
                  GROUP_WORDS, _group_form),
    AttributeSpec('beta', 'covering', TAGGED, 'none',
                  'every (or every marked) node lies on the walk or within a distance bound of it',
                  COVERING_WORDS, _covering_form),
    AttributeSpec('gamma', 'start', BOOLEAN, 'False',
                  'the walk starts at a given node s',
                  ('start',), _bare('start')),
    AttributeSpec('gamma', 'end', BOOLEAN, 'False',
                  'the walk ends at a given node t',
                  ('end',), _bare('end')),
    AttributeSpec('gamma', 'circuit', BOOLEAN, 'False',
                  'the walk is closed and returns to its first node',
                  ('circuit',), _bare('circuit')),
    AttributeSpec('gamma', 'graphtype', TAGGED, 'arbitrary',
                  'structure of the underlying graph',
                  GRAPHTYPE_WORDS, _words(GRAPHTYPE_WORDS, ('tree',))),
    AttributeSpec('gamma', 'edgetype', TAGGED, 'none',
                  'direction of the edges of the graph',
                  EDGETYPE_WORDS, _words(EDGETYPE_WORDS)),
    AttributeSpec('gamma', 'precedences', TAGGED, 'none',
                  'some nodes must be visited before others',
                  PRECEDENCE_WORDS, _words(PRECEDENCE_WORDS)),
    AttributeSpec('gamma', 'cluster', TAGGED, 'none',
                  'nodes of a cluster are visited consecutively, optionally in a given order',
                  CLUSTER_WORDS, _words(CLUSTER_WORDS, CLUSTER_WORDS)),
    AttributeSpec('delta', 'property', TAGGED, 'none',
                  'metric properties of an edge cost function',
                  PROPERTY_WORDS + PARAM_WORDS, _property_form),
    AttributeSpec('delta', 'partial', BOOLEAN, 'False',
                  'a walk may incur only part of the cost values',
                  ('partial',), _bare('partial')),
    AttributeSpec('delta', 'temporal', TAGGED, 'none',
                  'the cost of an element changes along the walk',
                  TEMPORAL_WORDS, _temporal_form),
)


class AttributeRegistry:
    """Immutable lookup over the attribute entries of every field."""

    def __init__(self, specs):
        self._specs: Dict[Tuple[str, str], AttributeSpec] = {}
        self._by_field: Dict[str, List[AttributeSpec]] = {}
        for spec in specs:
            self._specs[(spec.field, spec.name)] = spec
            self._by_field.setdefault(spec.field, []).append(spec)

    def attributes(self, field_kind: str) -> Tuple[AttributeSpec, ...]:
        return tuple(self._by_field.get(field_kind, ()))

    def spec(self, field_kind: str, name: str) -> AttributeSpec:
        """
        Look up a named attribute.

        Raises:
            RegistryError: For unknown names and for traveler-indexed names
                such as circuit_t
        """
        found = self._specs.get((field_kind, name))
        if found is not None:
            return found
        indexed = _INDEXED.match(name)
        if indexed and (field_kind, indexed.group(1)) in self._specs:
            raise RegistryError(
                f"Attribute {name} is indexed by traveler; multi-traveler definitions are not supported")
        raise RegistryError(f"Unknown attribute {name!r} in the {field_kind} field")

    def candidates(self, field_kind: str, relation: Optional[str], value: Expr) -> List[AttributeSpec]:
        """Attributes of a field that own an unnamed value form."""
        if isinstance(value, Alternatives):
            found: List[AttributeSpec] = []
            for option in value.options:
                option_relation, option_value = relation, option
                if isinstance(option, RelValue):
                    option_relation, option_value = option.relation, option.operand
                for spec in self.candidates(field_kind, option_relation, option_value):
                    if spec not in found:
                        found.append(spec)
            return found
        if isinstance(value, Wildcard):
            return []
        return [spec for spec in self._by_field.get(field_kind, ()) if spec.owns(relation, value)]

    def word_owner(self, field_kind: str, word: str) -> Optional[AttributeSpec]:
        """
        The attribute owning a tagged value word, for longhand forms such as
        ``complete = True``.
        """
        for spec in self._by_field.get(field_kind, ()):
            if spec.kind == TAGGED and word in spec.words:
                return spec
        return None


REGISTRY = AttributeRegistry(_SPECS)


def meaning(field_kind: str, name: str) -> str:
    return REGISTRY.spec(field_kind, name).meaning
