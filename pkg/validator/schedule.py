#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Arrival times along a walk.

The arrival time at the i-th visited node is the travel cost of the walk
before it, plus all waiting up to and including the node, plus the handling
times of the nodes visited before it. Waits are chosen as small as possible:
the traveler waits only to reach a release date.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from core.costs import NODES, CostFunction, Value
from core.errors import BindingError, UnsupportedError
from core.walk import EdgeStep, NodeVisit, Walk, originating_proper_walk
from instances.binding import epsilon_value
from instances.model import Instance
from semantics.model import ResolvedVariant
from semantics.objectives import TimeWindow, WindowBound

VISIT = 'visit'
PASS = 'pass'
EDGE = 'edge'


def timeline(walk: Walk) -> List[Tuple[str, str]]:
    """
    The originating proper walk as events: ``visit`` or ``pass`` for node
    occurrences and ``edge`` for edges. Restored nodes are passed, not visited.
    """
    proper = originating_proper_walk(walk._require_graph(), walk)
    original = walk.items
    pointer = 0
    events = []
    for item in proper.items:
        explicit = pointer < len(original) and original[pointer] == item
        if explicit:
            pointer += 1
        if isinstance(item, EdgeStep):
            events.append((EDGE, item.edge))
        elif explicit and item.visited:
            events.append((VISIT, item.node))
        else:
            events.append((PASS, item.node))
    return events


def edge_cost_at(table: CostFunction, edge_id: str, time: Value, position: int) -> Value:
    """Cost of an edge entered at ``time`` after ``position`` earlier edges."""
    if table.temporal is None:
        return table.value(edge_id)
    key = time if table.temporal.kind == 'time' else position
    return table.temporal.value_at(edge_id, key)


def window_value(bound: WindowBound, instance: Instance, node: str) -> Value:
    base = instance.table(bound.symbol).value(node) if bound.per_node else instance.param(bound.symbol)
    factor = bound.scale
    if bound.eps_scale:
        factor = factor + bound.eps_scale * epsilon_value(instance)
    value = base if factor == 1 else factor * base
    value = value + bound.offset
    if bound.handling:
        value = value - instance.table(bound.handling).value(node)
    return value


@dataclass(frozen=True)
class Schedule:
    nodes: Tuple[str, ...]
    arrivals: Tuple[Value, ...]
    waits: Tuple[Value, ...]
    travel: Value = Fraction(0)
    handling: Value = Fraction(0)

    @property
    def total_wait(self) -> Value:
        return sum(self.waits, Fraction(0))

    @property
    def completion(self) -> Value:
        return self.travel + self.total_wait + self.handling


def simulate(instance: Instance, walk: Walk, travel: Sequence[str], handling: Optional[str] = None,
             release: Optional[WindowBound] = None, waiting: bool = False) -> Schedule:
    """
    Walk the timeline once, choosing minimal waits.

    Args:
        instance: instance with the travel, handling and release tables
        walk: walk bound to the instance graph
        travel: edge tables summed into the travel time
        handling: node table spent at every visited node
        release: release side of a time window; waits meet it when allowed
        waiting: whether the traveler may wait
    """
    tables = [instance.table(name) for name in travel]
    handling_table = instance.table(handling) if handling else None
    if handling_table is not None and handling_table.domain != NODES:
        raise BindingError(f"Handling time {handling} must be a node table")
    time: Value = Fraction(0)
    travel_total: Value = Fraction(0)
    handling_total: Value = Fraction(0)
    position = 0
    nodes, arrivals, waits = [], [], []
    for kind, ident in timeline(walk):
        if kind == EDGE:
            step = sum((edge_cost_at(table, ident, time, position) for table in tables), Fraction(0))
            time += step
            travel_total += step
            position += 1
        elif kind == VISIT:
            wait: Value = Fraction(0)
            if waiting and release is not None:
                opens = window_value(release, instance, ident)
                if opens > time:
                    wait = opens - time
            time += wait
            nodes.append(ident)
            arrivals.append(time)
            waits.append(wait)
            if handling_table is not None:
                spent = handling_table.value(ident)
                time += spent
                handling_total += spent
    return Schedule(tuple(nodes), tuple(arrivals), tuple(waits), travel_total, handling_total)


def time_window_of(variant: ResolvedVariant) -> Optional[TimeWindow]:
    windows = [statement for statement in variant.objectives if isinstance(statement, TimeWindow)]
    if len(windows) > 1:
        raise UnsupportedError("A variant may declare one time window statement")
    return windows[0] if windows else None


def arrival_schedule(variant: ResolvedVariant, instance: Instance, walk: Walk) -> Schedule:
    """
    Per-visit arrival times under the variant's time window statement.

    Returns:
        Schedule: visited nodes in order with their arrival times and waits

    Raises:
        UnsupportedError: If the variant declares no time window
        BindingError: If a travel, handling or window table is missing
    """
    window = time_window_of(variant)
    if window is None:
        raise UnsupportedError("Variant declares no time window")
    return simulate(instance, walk, window.travel, window.handling, window.release, window.waiting is not None)
