#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Typed semantic model of a resolved variant definition.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Tuple

# visit modes
VISITS_DEFAULT = 'default'
VISITS_ALWAYS = 'always'
VISITS_ONCE = 'once'
VISITS_AT_LEAST_ONCE = 'at-least-once'
VISITS_AT_MOST_ONCE = 'at-most-once'


@dataclass(frozen=True)
class CountSpec:
    relation: str = '='
    value: str = '1'

    def is_single(self) -> bool:
        return self.relation == '=' and self.value == '1'

    def __str__(self):
        return f"{self.relation}{self.value}"


@dataclass(frozen=True)
class TraversalSpec:
    """
    How often each node is traversed.

    ``amount`` is a number (``'1'``, ``'0'``), the uniform parameter ``'d'``
    or the per-node parameter ``'d(v)'``; ``value_set`` restricts a per-node
    parameter, as in ``≥ d(v) ∈ {0, 1}``.
    """
    relation: str = '≥'
    amount: str = '0'
    value_set: Optional[Tuple[str, ...]] = None

    @property
    def per_node(self) -> bool:
        return self.amount == 'd(v)'

    @property
    def is_numeric(self) -> bool:
        return self.amount not in ('d', 'd(v)')

    def label(self) -> str:
        text = f"{self.relation}{self.amount}"
        if self.value_set is not None:
            text += ' ∈ {' + ', '.join(self.value_set) + '}'
        return text

    def __str__(self):
        return self.label()


@dataclass(frozen=True)
class GroupSpec:
    kind: str
    multiplicity: str = VISITS_ONCE
    parts: Optional[str] = None
    params: Tuple[str, ...] = ()


@dataclass(frozen=True)
class CoveringSpec:
    scope: str
    cost: str
    relation: str
    bound: str


@dataclass(frozen=True)
class GraphType:
    tag: str = 'arbitrary'
    args: Tuple[str, ...] = ()


@dataclass(frozen=True)
class ClusterSpec:
    kind: str
    params: Tuple[str, ...] = ()

    @property
    def ordered(self) -> bool:
        return 'ordered' in self.params

    @property
    def sequence(self) -> Optional[str]:
        for param in self.params:
            if param in ('start', 'startend', 'terminals'):
                return param
        return None


@dataclass(frozen=True)
class TourSpec:
    start: bool = False
    end: bool = False
    circuit: bool = False
    graphtype: GraphType = GraphType()
    edgetype: Optional[str] = None
    precedences: str = 'none'
    cluster: Optional[ClusterSpec] = None


METRIC_PARAMS = frozenset({'identity', 'symmetric', 'triangle'})


@dataclass(frozen=True)
class PropertySpec:
    """
    Declared properties of an edge cost function.

    ``tag`` is a named property such as metric or euclidean; ``params`` are
    the explicit parameters (identity, symmetric, triangle, α-triangle).
    ``alpha`` names the constant of an α-triangle parameter.
    """
    tag: Optional[str] = None
    params: frozenset = frozenset()
    alpha: Optional[str] = None
    args: Tuple[str, ...] = ()

    def effective_params(self, undirected: bool = False) -> frozenset:
        implied = set(self.params)
        if self.tag in ('metric', 'euclidean', 'euclid', 'euclidean fixed dim', 'euclidean plane', 'grid'):
            implied |= METRIC_PARAMS
        if self.tag == 'shoreline':
            implied |= {'symmetric'}
        if undirected:
            implied.add('symmetric')
        return frozenset(implied)

    def is_euclidean(self) -> bool:
        return self.tag in ('euclidean', 'euclid', 'euclidean fixed dim', 'euclidean plane', 'grid')


@dataclass(frozen=True)
class TemporalSpec:
    tag: str
    args: Tuple[str, ...] = ()


@dataclass(frozen=True)
class CostSignature:
    name: str
    domain: str
    range_tag: str
    declared_property: Optional[PropertySpec] = None
    partial: bool = False
    temporal: Optional[TemporalSpec] = None
    family_index: Optional[str] = None
    family_upper: Optional[str] = None

    @property
    def base(self) -> str:
        """Name without the family subscript: avail_i -> avail."""
        return self.name.split('_', 1)[0] if self.family_index else self.name

    @property
    def is_family(self) -> bool:
        return self.family_index is not None

    @property
    def is_waiting(self) -> bool:
        return self.temporal is not None and self.temporal.tag == 'waiting'


@dataclass(frozen=True)
class OpenAttribute:
    """An attribute of a template definition left as a wildcard or a choice."""
    field: str
    name: str
    options: Tuple[str, ...]


@dataclass(frozen=True)
class ResolvedVariant:
    count: CountSpec = CountSpec()
    traversal: TraversalSpec = TraversalSpec()
    visits: str = VISITS_DEFAULT
    group: Optional[GroupSpec] = None
    covering: Optional[CoveringSpec] = None
    tour: TourSpec = TourSpec()
    costs: Tuple[CostSignature, ...] = ()
    objectives: Tuple = ()
    open_attributes: Tuple[OpenAttribute, ...] = ()
    extension_tag: Optional[str] = field(default=None, compare=False)
    annotations: Tuple = field(default=(), compare=False)
    notation: Optional[str] = field(default=None, compare=False)

    @property
    def is_template(self) -> bool:
        return bool(self.open_attributes)

    @property
    def has_extension(self) -> bool:
        return self.extension_tag is not None

    def cost(self, name: str) -> Optional[CostSignature]:
        for signature in self.costs:
            if signature.name == name or (signature.is_family and signature.base == name):
                return signature
        return None

    def cost_names(self) -> Tuple[str, ...]:
        return tuple(signature.name for signature in self.costs)
