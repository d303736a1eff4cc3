#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Concrete problem instances.

An instance binds the symbols of a variant definition to data: a graph,
element-keyed tables (edge costs, node costs, release and due dates,
availabilities, ...), scalar parameters and node structures such as groups,
clusters and precedences.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Dict, Mapping, Optional, Tuple

from core.costs import EDGES, NODES, CostFunction, Value
from core.errors import BindingError, InstanceInvariantError
from core.graph import Graph


@dataclass(frozen=True)
class NodeGroup:
    """A group or cluster of nodes, with optional designated nodes."""
    index: str
    nodes: Tuple[str, ...]
    start: Optional[str] = None
    end: Optional[str] = None
    terminals: Tuple[str, ...] = ()


@dataclass(frozen=True)
class KineticTarget:
    """Moving target: position at time 0 and velocity. Parsed only."""
    node: str
    origin: Tuple[Fraction, Fraction]
    velocity: Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Instance:
    graph: Graph
    tables: Mapping[str, CostFunction] = field(default_factory=dict)
    params: Mapping[str, Value] = field(default_factory=dict)
    start_node: Optional[str] = None
    end_node: Optional[str] = None
    groups: Tuple[NodeGroup, ...] = ()
    clusters: Tuple[NodeGroup, ...] = ()
    coords: Mapping[str, Tuple[Fraction, Fraction]] = field(default_factory=dict)
    nodeset: Tuple[str, ...] = ()
    precedences: Tuple[Tuple[str, ...], ...] = ()
    kinetic: Tuple[KineticTarget, ...] = ()
    closure_paths: Mapping[str, Tuple[str, ...]] = field(default_factory=dict, compare=False)
    name: str = ''

    def __post_init__(self):
        self._check_windows()
        for node in (self.start_node, self.end_node):
            if node is not None and not self.graph.has_node(node):
                raise InstanceInvariantError(f"Designated node {node} is not in the graph")
        for group in self.groups + self.clusters:
            for node in group.nodes:
                if not self.graph.has_node(node):
                    raise InstanceInvariantError(f"Group {group.index} names unknown node {node}")

    def _check_windows(self):
        release, deadline = self.tables.get('r'), self.tables.get('d')
        if release is None or deadline is None:
            return
        if release.domain != NODES or deadline.domain != NODES:
            return
        for node, opens in release.values.items():
            closes = deadline.values.get(node)
            if closes is not None and opens > closes:
                raise InstanceInvariantError(
                    f"Time window of {node} is empty: r({node}) = {opens} > d({node}) = {closes}")

    def table(self, name: str) -> CostFunction:
        try:
            return self.tables[name]
        except KeyError:
            raise BindingError(f"Instance has no table {name}")

    def param(self, name: str) -> Value:
        try:
            return self.params[name]
        except KeyError:
            raise BindingError(f"Instance has no parameter {name}")

    def has_table(self, name: str) -> bool:
        return name in self.tables

    def family(self, base: str) -> Dict[int, CostFunction]:
        """Tables base_1 .. base_m of an indexed family, keyed by index."""
        found = {}
        prefix = f"{base}_"
        for name, table in self.tables.items():
            suffix = name[len(prefix):]
            if name.startswith(prefix) and suffix.isdigit():
                found[int(suffix)] = table
        return dict(sorted(found.items()))

    def product_count(self) -> int:
        if 'm' in self.params:
            return int(self.params['m'])
        counts = [len(self.family(base)) for base in ('avail', 'price')]
        return max(counts) if counts else 0

    def edge_costs(self, name: str = 'c') -> Dict[str, Value]:
        table = self.table(name)
        if table.domain != EDGES:
            raise BindingError(f"Table {name} is not an edge cost")
        return dict(table.values)

    def with_tables(self, **tables) -> 'Instance':
        merged = dict(self.tables)
        merged.update(tables)
        return replace(self, tables=merged)

    def scaled(self, factor: Fraction, names=('c',)) -> 'Instance':
        """Copy with the named tables multiplied by a positive factor."""
        tables = dict(self.tables)
        for name in names:
            table = tables[name]
            tables[name] = replace(table, values={k: v * factor for k, v in table.values.items()})
        return replace(self, tables=tables)
