#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Cost functions over edges, nodes or consecutive edge pairs, and their
separable lifting to walks.
"""

from __future__ import annotations

import bisect
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Tuple, Union

from core.errors import BindingError, SchemaError, T3coError, UnsupportedError
from core.walk import Walk, _closed_explicitly, counted_visits, is_closed

EDGES = 'edges'
NODES = 'nodes'
EDGE_PAIRS = 'edge-pairs'
DOMAINS = (EDGES, NODES, EDGE_PAIRS)

INF = float('inf')

Value = Union[Fraction, float]

_DECIMAL = re.compile(r'^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$')
_RATIONAL = re.compile(r'^[+-]?\d+/\d+$')


def parse_value(text: str) -> Value:
    """
    Parse an exact value: integers, decimals, ``p/q`` rationals, ``inf``/``∞``.

    Raises:
        SchemaError: If the text is not a number
    """
    token = text.strip()
    if token in ('inf', '∞', '+inf', 'Infinity'):
        return INF
    if token in ('-inf', '-∞'):
        return -INF
    if _RATIONAL.match(token):
        numerator, denominator = token.split('/')
        if int(denominator) == 0:
            raise SchemaError(f"Zero denominator in {token}")
        return Fraction(int(numerator), int(denominator))
    if _DECIMAL.match(token):
        return Fraction(token)
    raise SchemaError(f"Not a number: {token}")


def format_value(value: Value) -> str:
    if value == INF:
        return 'inf'
    if value == -INF:
        return '-inf'
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


_RANGE_ALIASES = {
    'R': 'ℝ', 'Z': 'ℤ', 'N': 'ℕ', 'Q': 'ℚ',
    '>=': '≥', '<=': '≤',
}
_RANGE_PATTERN = re.compile(r'^(ℝ|ℤ|ℕ|ℚ)(?:(≥|>|≤|<)(-?\d+))?$')


def normalize_range_tag(tag: str) -> str:
    """Canonical Unicode spelling of a range tag such as ``R>=0`` or ``{0,1}``."""
    text = tag.replace(' ', '')
    for ascii_form, unicode_form in _RANGE_ALIASES.items():
        text = text.replace(ascii_form, unicode_form)
    if text.startswith('{') and text.endswith('}'):
        members = [m for m in text[1:-1].split(',') if m]
        return '{' + ', '.join(members) + '}'
    return text


def range_contains(tag: Optional[str], value: Value) -> bool:
    """
    Check a value against a range tag.

    Unknown tags accept every value; callers decide whether to warn.
    """
    if tag is None:
        return True
    canonical = normalize_range_tag(tag)
    if canonical.startswith('{'):
        members = canonical[1:-1].split(', ')
        allowed = set()
        for member in members:
            try:
                allowed.add(parse_value(member))
            except SchemaError:
                return True
        return value in allowed
    match = _RANGE_PATTERN.match(canonical)
    if match is None:
        return True
    base, relation, bound = match.groups()
    if base in ('ℤ', 'ℕ') and value not in (INF, -INF) and Fraction(value).denominator != 1:
        return False
    if base == 'ℕ' and value < 0:
        return False
    if relation is None:
        return True
    bound = Fraction(int(bound))
    return {
        '≥': value >= bound,
        '>': value > bound,
        '≤': value <= bound,
        '<': value < bound,
    }[relation]


@dataclass(frozen=True)
class TemporalTable:
    """
    Piecewise-constant values keyed by a breakpoint.

    ``kind`` is ``time`` (breakpoints are arrival times) or ``position``
    (breakpoints are prefix edge counts). ``steps`` maps each element to a
    sorted tuple of ``(breakpoint, value)``; the first breakpoint is 0.
    """
    kind: str
    steps: Mapping[str, Tuple[Tuple[Fraction, Value], ...]]

    def value_at(self, element: str, key: Value) -> Value:
        if element not in self.steps:
            raise BindingError(f"No temporal value for {element}")
        steps = self.steps[element]
        breakpoints = [point for point, _ in steps]
        index = bisect.bisect_right(breakpoints, key) - 1
        if index < 0:
            index = 0
        return steps[index][1]


@dataclass(frozen=True)
class CostFunction:
    name: str
    domain: str
    values: Mapping = field(default_factory=dict)
    range_tag: Optional[str] = None
    temporal: Optional[TemporalTable] = None

    def __post_init__(self):
        if self.domain not in DOMAINS:
            raise T3coError(f"Unknown cost domain {self.domain} for {self.name}")

    def __hash__(self):
        return hash((self.name, self.domain, self.range_tag))

    def value(self, element) -> Value:
        try:
            return self.values[element]
        except KeyError:
            raise BindingError(f"Cost function {self.name} has no value for {element}")

    def out_of_range(self):
        """Elements whose value lies outside the declared range."""
        return [element for element, value in self.values.items()
                if not range_contains(self.range_tag, value)]


def _closed(walk: Walk) -> bool:
    if walk.graph is None:
        return _closed_explicitly(walk.items)
    return is_closed(walk)


def edge_pairs(walk: Walk):
    edges = walk.edge_ids
    pairs = list(zip(edges, edges[1:]))
    if len(edges) > 1 and _closed(walk):
        pairs.append((edges[-1], edges[0]))
    return pairs


def lift_cost(c: CostFunction, walk: Walk) -> Value:
    """
    Lift a separable cost function to a walk.

    Edge costs are summed over S_E and node costs over S_V, each with
    multiplicity; edge-pair costs are summed over consecutive edges of S_E.

    Raises:
        BindingError: If a referenced element has no value
        UnsupportedError: If the function is temporal and needs a schedule
    """
    if c.temporal is not None:
        raise UnsupportedError(f"Cost function {c.name} is temporal; evaluate it along a schedule")
    total: Value = Fraction(0)
    if c.domain == EDGES:
        for edge_id in walk.edge_ids:
            total += c.value(edge_id)
    elif c.domain == NODES:
        for node in counted_visits(walk):
            total += c.value(node)
    else:
        for pair in edge_pairs(walk):
            total += c.value(pair)
    return total


def complement_cost(p: CostFunction, walk: Walk) -> Value:
    """
    Sum of p over the nodes the walk does not visit.

    Raises:
        T3coError: If p is not defined over nodes
    """
    if p.domain != NODES:
        raise T3coError(f"Complement cost needs a node cost function, {p.name} is over {p.domain}")
    visited = set(counted_visits(walk))
    total: Value = Fraction(0)
    for node, value in p.values.items():
        if node not in visited:
            total += value
    return total
