#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Feasibility checks, one function per constraint family.

Each function returns ``Check`` entries; a failed check carries the node,
index or bound that shows the violation.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

import networkx as nx

from core.costs import Value, format_value, parse_value
from core.errors import BindingError, SchemaError
from core.walk import counted_traversals, counted_visits, is_closed
from semantics.model import (
    VISITS_ALWAYS, VISITS_AT_LEAST_ONCE, VISITS_AT_MOST_ONCE, VISITS_ONCE,
)
from semantics.objectives import AVAILABILITY, DEMAND, LowerBound, PurchaseDemand, TimeWindow, UpperBound
from validator.evaluate import EvaluationContext
from validator.schedule import window_value

RELATIONS: Dict[str, Callable] = {
    '=': operator.eq,
    '≥': operator.ge,
    '≤': operator.le,
    '>': operator.gt,
    '<': operator.lt,
    '≠': operator.ne,
}


@dataclass(frozen=True)
class Check:
    id: str
    passed: bool
    witness: Optional[str] = None
    detail: str = ''

    def __str__(self):
        text = f"{'PASS' if self.passed else 'FAIL'} {self.id}"
        if self.witness:
            text += f" [{self.witness}]"
        if self.detail:
            text += f": {self.detail}"
        return text


def _fmt(value) -> str:
    try:
        return format_value(value)
    except (TypeError, ValueError):
        return str(value)


def _scalar(context: EvaluationContext, symbol: str) -> Value:
    if symbol in context.instance.params:
        return context.instance.params[symbol]
    try:
        return parse_value(symbol)
    except SchemaError:
        raise BindingError(f"Instance has no parameter {symbol}")


# β field

def check_traversals(context: EvaluationContext) -> List[Check]:
    spec = context.variant.traversal
    compare = RELATIONS[spec.relation]
    counts = counted_traversals(context.walk)
    for node in context.instance.graph.nodes:
        if spec.amount == 'd':
            amount = context.instance.param('d')
        elif spec.per_node:
            amount = context.instance.table('d').value(node)
        else:
            amount = Fraction(spec.amount)
        found = counts.count(node)
        if not compare(found, amount):
            return [Check('traversals', False, node,
                          f"traversals({node}) = {found} violates {spec.relation} {_fmt(amount)}")]
    return [Check('traversals', True)]


def check_visits(context: EvaluationContext) -> List[Check]:
    mode = context.variant.visits
    if mode not in (VISITS_ALWAYS, VISITS_ONCE, VISITS_AT_LEAST_ONCE, VISITS_AT_MOST_ONCE):
        return []
    traversals = counted_traversals(context.walk)
    visits = counted_visits(context.walk)
    for node in context.instance.graph.nodes:
        traversed, visited = traversals.count(node), visits.count(node)
        if mode == VISITS_ALWAYS:
            ok = visited == traversed
        elif traversed == 0:
            ok = True
        elif mode == VISITS_ONCE:
            ok = visited == 1
        elif mode == VISITS_AT_LEAST_ONCE:
            ok = visited >= 1
        else:
            ok = visited <= 1
        if not ok:
            return [Check('visits', False, node,
                          f"visits({node}) = {visited}, traversals({node}) = {traversed} violates {mode}")]
    return [Check('visits', True)]


def check_group(context: EvaluationContext) -> List[Check]:
    spec = context.variant.group
    if spec is None:
        return []
    visited = context.parts.visited_set
    for group in context.instance.groups:
        hits = len(visited & set(group.nodes))
        if spec.multiplicity == VISITS_AT_LEAST_ONCE:
            ok = hits >= 1
        elif spec.multiplicity == VISITS_AT_MOST_ONCE:
            ok = hits <= 1
        else:
            ok = hits == 1
        if not ok:
            return [Check('group', False, f"P_{group.index}",
                          f"{hits} visited nodes in group {group.index}, expected {spec.multiplicity}")]
    return [Check('group', True)]


def check_covering(context: EvaluationContext) -> List[Check]:
    spec = context.variant.covering
    if spec is None:
        return []
    instance = context.instance
    table = instance.table(spec.cost)
    bound = _scalar(context, spec.bound)
    compare = RELATIONS.get(spec.relation, operator.le)
    weights = {edge.id: table.value(edge.id) for edge in instance.graph.edges}
    nx_graph = instance.graph.to_networkx(weights)
    visited = sorted(context.parts.visited_set)
    if visited:
        distances = nx.multi_source_dijkstra_path_length(nx_graph, visited, weight='weight')
    else:
        distances = {}
    targets = instance.graph.nodes if spec.scope == 'all' else instance.nodeset
    for node in targets:
        if node in context.parts.visited_set:
            continue
        distance = distances.get(node)
        if distance is None or not compare(distance, bound):
            shown = 'unreachable' if distance is None else _fmt(distance)
            return [Check('covering', False, node,
                          f"dist_{spec.cost}({node}, walk) = {shown} violates {spec.relation} {_fmt(bound)}")]
    return [Check('covering', True)]


# γ field

def check_tour(context: EvaluationContext) -> List[Check]:
    tour = context.variant.tour
    instance = context.instance
    checks = []
    if tour.start:
        first = context.parts.start()
        checks.append(Check('start', first == instance.start_node,
                            None if first == instance.start_node else first,
                            f"walk starts at {first}, s = {instance.start_node}"))
    if tour.end:
        last = context.parts.end()
        checks.append(Check('end', last == instance.end_node,
                            None if last == instance.end_node else last,
                            f"walk ends at {last}, t = {instance.end_node}"))
    if tour.circuit:
        trivial = not context.walk.edge_ids and len(context.walk.items) == 1
        closed = trivial or is_closed(context.walk)
        checks.append(Check('circuit', closed, None if closed else context.parts.end(),
                            '' if closed else "walk does not return to its first node"))
    return checks


def _undirected(graph):
    simple = nx.Graph()
    simple.add_nodes_from(graph.nodes)
    simple.add_edges_from(edge.endpoints for edge in graph.edges if not edge.is_loop())
    return simple


def _graphtype_holds(context: EvaluationContext) -> Tuple[bool, str]:
    graph = context.instance.graph
    graphtype = context.variant.tour.graphtype
    tag = graphtype.tag
    if tag == 'complete':
        return graph.is_complete(), "some node pair is not joined by an edge"
    if tag == 'strongly connected':
        nx_graph = graph.to_networkx()
        connected = nx.is_strongly_connected(nx_graph) if graph.is_directed else nx.is_connected(nx_graph)
        return connected, "graph is not strongly connected"
    simple = _undirected(graph)
    degrees = dict(simple.degree())
    if tag == 'path':
        return (nx.is_tree(simple) and max(degrees.values(), default=0) <= 2), "graph is not a path"
    if tag == 'cycle':
        ok = nx.is_connected(simple) and len(graph.edges) == len(graph.nodes) and all(d == 2 for d in degrees.values())
        return ok, "graph is not a cycle"
    if tag in ('tree', 'binary tree'):
        if not nx.is_tree(simple):
            return False, "graph is not a tree"
        if tag == 'binary tree':
            high = [node for node, degree in degrees.items() if degree > 3]
            roots = [node for node, degree in degrees.items() if degree <= 2]
            return (not high and bool(roots)), "some node has more than two children"
        if graphtype.args:
            leaves = sum(1 for degree in degrees.values() if degree == 1)
            wanted = _scalar(context, graphtype.args[0])
            return leaves == wanted, f"tree has {leaves} leaves, expected {_fmt(wanted)}"
        return True, ''
    return True, ''


def check_graph(context: EvaluationContext) -> List[Check]:
    tour = context.variant.tour
    checks = []
    if tour.edgetype is not None:
        direction = context.instance.graph.direction
        ok = direction == tour.edgetype
        checks.append(Check('edgetype', ok, None if ok else direction,
                            '' if ok else f"instance graph is {direction}, variant expects {tour.edgetype}"))
    tag = tour.graphtype.tag
    if tag in ('arbitrary', 'planar'):
        if tag == 'planar':
            checks.append(Check('graphtype', True, detail='planar is declared only'))
        return checks
    ok, reason = _graphtype_holds(context)
    checks.append(Check('graphtype', ok, None if ok else tag, '' if ok else reason))
    return checks


def check_precedences(context: EvaluationContext) -> List[Check]:
    if context.variant.tour.precedences != 'atomic':
        return []
    sequence = context.parts.visited_sequence
    for chain in context.instance.precedences:
        for before, after in zip(chain, chain[1:]):
            if after not in sequence:
                continue
            first_after = sequence.index(after)
            if before not in sequence[:first_after]:
                return [Check('precedences', False, f"{before}<{after}",
                              f"{after} is visited at position {first_after} before any visit of {before}")]
    return [Check('precedences', True)]


def _cyclic_start(sequence, member) -> int:
    """First position of a closed walk where cluster membership changes from the node before."""
    keys = [frozenset(member.get(node, ())) for node in sequence]
    for i in range(len(keys)):
        if keys[i] != keys[i - 1]:
            return i
    return 0


def check_cluster(context: EvaluationContext) -> List[Check]:
    spec = context.variant.tour.cluster
    if spec is None:
        return []
    clusters = context.instance.clusters
    sequence = counted_visits(context.walk)
    member = {}
    for position, cluster in enumerate(clusters):
        for node in cluster.nodes:
            member.setdefault(node, []).append(position)
    if is_closed(context.walk):
        # a circuit may enter its first cluster again on the way home
        shift = _cyclic_start(sequence, member)
        sequence = sequence[shift:] + sequence[:shift]
    for cluster in clusters:
        positions = [i for i, node in enumerate(sequence) if node in cluster.nodes]
        if not positions:
            continue
        gap = [i for i in range(positions[0], positions[-1] + 1) if sequence[i] not in cluster.nodes]
        if gap:
            return [Check('cluster', False, f"{sequence[gap[0]]}@{gap[0]}",
                          f"cluster {cluster.index} is interrupted at position {gap[0]}")]
        first, last = sequence[positions[0]], sequence[positions[-1]]
        if spec.sequence in ('start', 'startend') and first != cluster.start:
            return [Check('cluster', False, first, f"cluster {cluster.index} is entered at {first}, not {cluster.start}")]
        if spec.sequence == 'startend' and last != cluster.end:
            return [Check('cluster', False, last, f"cluster {cluster.index} is left at {last}, not {cluster.end}")]
        if spec.sequence == 'terminals':
            outside = [node for node in (first, last) if node not in cluster.terminals]
            if outside:
                return [Check('cluster', False, outside[0],
                              f"cluster {cluster.index} is entered or left at non-terminal {outside[0]}")]
    if spec.ordered:
        for i, node in enumerate(sequence):
            for j in range(i + 1, len(sequence)):
                later = sequence[j]
                if node in member and later in member and min(member[node]) > max(member[later]):
                    return [Check('cluster', False, f"{node}@{i},{later}@{j}",
                                  "clusters are visited out of order")]
    return [Check('cluster', True)]


# ε constraints

def _bound_value(context: EvaluationContext, bound) -> Value:
    return bound.constant if bound.symbol is None else context.instance.param(bound.symbol)


def check_bound(context: EvaluationContext, statement) -> Check:
    value = context.term(statement.term)
    limit = _bound_value(context, statement.bound)
    if isinstance(statement, UpperBound):
        ok = value <= limit
    else:
        ok = value >= limit
    label = statement.label()
    refs = ','.join(statement.term.cost_refs()) or str(statement.term)
    witness = f"{type(statement).__name__}({refs},{_fmt(limit)})"
    return Check(f"bound:{label}", ok, None if ok else witness,
                 f"value {_fmt(value)}, bound {_fmt(limit)}")


def check_time_window(context: EvaluationContext, statement: TimeWindow) -> Check:
    schedule = context.schedule
    instance = context.instance
    for index, (node, arrival) in enumerate(zip(schedule.nodes, schedule.arrivals)):
        if statement.release is not None:
            opens = window_value(statement.release, instance, node)
            early = arrival <= opens if statement.release_strict else arrival < opens
            if early:
                return Check('time-window', False, f"{node}@{index}",
                             f"arrival {_fmt(arrival)} before release {_fmt(opens)}")
        if statement.deadline is not None:
            closes = window_value(statement.deadline, instance, node)
            late = arrival >= closes if statement.deadline_strict else arrival > closes
            if late:
                return Check('time-window', False, f"{node}@{index}",
                             f"arrival {_fmt(arrival)} after deadline {_fmt(closes)}")
    return Check('time-window', True)


def check_purchase(context: EvaluationContext, statement: PurchaseDemand) -> Check:
    solution = context.solution
    if solution.shares is None:
        raise BindingError("Variant requires purchase shares but the solution has none")
    instance = context.instance
    visited = context.parts.visited_set
    for product in range(1, context.product_count() + 1):
        if statement.kind == DEMAND:
            bought = sum((solution.share(product, node) for node in visited), Fraction(0))
            if statement.bound.symbol is None:
                demand = statement.bound.constant
            else:
                demand = instance.param(f"{statement.bound.symbol}_{product}")
            if bought < demand:
                return Check('purchase', False, f"product {product}",
                             f"bought {_fmt(bought)} of demand {_fmt(demand)}")
        elif statement.kind == AVAILABILITY:
            avail = instance.table(f"{statement.bound.symbol}_{product}")
            for node in instance.graph.nodes:
                share = solution.share(product, node)
                if share > avail.value(node):
                    return Check('purchase', False, f"product {product} at {node}",
                                 f"share {_fmt(share)} exceeds availability {_fmt(avail.value(node))}")
    return Check('purchase', True)


def check_shares(context: EvaluationContext) -> List[Check]:
    shares = context.solution.shares
    if shares is None:
        return []
    if not any(signature.partial for signature in context.variant.costs):
        return [Check('shares', False, None, "shares given but the variant has no partial cost function")]
    visited = context.parts.visited_set
    for (product, node), amount in sorted(shares.items()):
        if amount < 0:
            return [Check('shares', False, f"{product},{node}", f"negative share {_fmt(amount)}")]
        if amount > 0 and node not in visited:
            return [Check('shares', False, f"{product},{node}", f"purchase at unvisited node {node}")]
    return [Check('shares', True)]


def check_constraints(context: EvaluationContext) -> List[Check]:
    checks = []
    for statement in context.variant.objectives:
        if isinstance(statement, (UpperBound, LowerBound)):
            checks.append(check_bound(context, statement))
        elif isinstance(statement, TimeWindow):
            checks.append(check_time_window(context, statement))
        elif isinstance(statement, PurchaseDemand):
            checks.append(check_purchase(context, statement))
    return checks
