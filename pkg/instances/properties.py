#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Verification of declared cost-function properties on concrete instances.

Every check is an exhaustive scan over node pairs or triples, so it is meant
for instances of desk size. A violated property carries a witness that
reproduces the violation on its own.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Optional, Tuple

from core.costs import EDGES
from core.graph import node_sort_key
from instances.model import Instance
from semantics.model import ResolvedVariant

VERIFIED = 'verified'
VIOLATED = 'violated'
DECLARED_ONLY = 'declared-only'

EUCLIDEAN_TOLERANCE = 1e-9

CHECKED = ('identity', 'symmetric', 'triangle', 'α-triangle', 'euclidean', 'shoreline')
DECLARED_ONLY_TAGS = ('graphic', 'planar', 'subset planar')


@dataclass(frozen=True)
class PropertyCheck:
    cost: str
    prop: str
    status: str
    witness: Optional[Tuple] = None
    detail: str = ''

    @property
    def holds(self) -> bool:
        return self.status != VIOLATED

    def __str__(self):
        text = f"{self.cost}: {self.prop} {self.status}"
        if self.witness is not None:
            text += f" (witness {', '.join(map(str, self.witness))})"
        if self.detail:
            text += f" - {self.detail}"
        return text


@dataclass(frozen=True)
class PropertyReport:
    checks: Tuple[PropertyCheck, ...] = ()

    def status(self, prop: str, cost: str = 'c') -> Optional[str]:
        for check in self.checks:
            if check.cost == cost and check.prop == prop:
                return check.status
        return None

    def violations(self) -> Tuple[PropertyCheck, ...]:
        return tuple(check for check in self.checks if check.status == VIOLATED)

    @property
    def consistent(self) -> bool:
        return not self.violations()

    def verified(self, *props: str, cost: str = 'c') -> bool:
        return all(self.status(prop, cost) == VERIFIED for prop in props)


def pair_costs(instance: Instance, name: str = 'c') -> Dict[Tuple[str, str], Fraction]:
    """Cheapest edge cost for every ordered node pair joined by an edge."""
    table = instance.table(name)
    graph = instance.graph
    pairs: Dict[Tuple[str, str], Fraction] = {}
    for edge in graph.edges:
        value = table.value(edge.id)
        orientations = [(edge.tail, edge.head)]
        if not graph.is_directed:
            orientations.append((edge.head, edge.tail))
        for pair in orientations:
            if pair not in pairs or value < pairs[pair]:
                pairs[pair] = value
    return pairs


def _ordered_nodes(instance: Instance):
    return sorted(instance.graph.nodes, key=node_sort_key)


def _identity(instance: Instance, name: str) -> PropertyCheck:
    table = instance.table(name)
    for edge in instance.graph.edges:
        value = table.value(edge.id)
        if (value > 0) != (not edge.is_loop()):
            return PropertyCheck(name, 'identity', VIOLATED, (edge.id,),
                                 f"{name}({edge.id}) = {value}")
    return PropertyCheck(name, 'identity', VERIFIED)


def _symmetric(instance: Instance, name: str) -> PropertyCheck:
    if instance.graph.is_directed:
        table = instance.table(name)
        for edge in instance.graph.edges:
            reverse = [table.value(other.id) for other in instance.graph.edges_between(edge.head, edge.tail)]
            if table.value(edge.id) not in reverse:
                return PropertyCheck(name, 'symmetric', VIOLATED, (edge.id,),
                                     f"no reverse edge of {edge.id} with cost {table.value(edge.id)}")
    return PropertyCheck(name, 'symmetric', VERIFIED)


def _triangle(instance: Instance, name: str, pairs, alpha: Fraction = Fraction(1),
              prop: str = 'triangle') -> PropertyCheck:
    nodes = _ordered_nodes(instance)
    for u in nodes:
        for v in nodes:
            direct = pairs.get((u, v))
            if direct is None:
                continue
            for w in nodes:
                if w in (u, v):
                    continue
                first, second = pairs.get((u, w)), pairs.get((w, v))
                if first is None or second is None:
                    continue
                if direct > alpha * (first + second):
                    return PropertyCheck(name, prop, VIOLATED, (u, w, v),
                                         f"{name}({u},{v}) = {direct} > {alpha}·({first} + {second})")
    return PropertyCheck(name, prop, VERIFIED)


def _off_distance(instance: Instance, name: str, edge) -> Optional[Tuple[float, float]]:
    """(cost, distance) of an edge whose cost misses the distance of its endpoints."""
    (x1, y1), (x2, y2) = instance.coords[edge.tail], instance.coords[edge.head]
    distance = math.hypot(float(x1) - float(x2), float(y1) - float(y2))
    value = float(instance.table(name).value(edge.id))
    if abs(value - distance) > EUCLIDEAN_TOLERANCE * max(1.0, distance):
        return value, distance
    return None


def _euclidean(instance: Instance, name: str) -> PropertyCheck:
    missing = [node for node in instance.graph.nodes if node not in instance.coords]
    if missing:
        return PropertyCheck(name, 'euclidean', DECLARED_ONLY, detail='instance has no coordinates')
    for edge in instance.graph.edges:
        found = _off_distance(instance, name, edge)
        if found is not None:
            value, distance = found
            return PropertyCheck(name, 'euclidean', VIOLATED, (edge.id,),
                                 f"{name}({edge.id}) = {value}, distance {distance}")
    return PropertyCheck(name, 'euclidean', VERIFIED)


def _line_cost(pairs, a, b):
    if a == b:
        return pairs.get((a, b), Fraction(0))
    return pairs.get((a, b))


def _shoreline_fault(pairs, witness: Tuple[str, ...]) -> Optional[str]:
    """
    Reason why one node, pair or triple breaks the shoreline conditions.

    A triple (vi, vk, vj) lies in line order i < k < j.
    """
    if len(witness) == 1:
        (vi,) = witness
        return None if _line_cost(pairs, vi, vi) == 0 else "nonzero cost to itself"
    if len(witness) == 2:
        vi, vj = witness
        forward, backward = _line_cost(pairs, vi, vj), _line_cost(pairs, vj, vi)
        return None if forward is not None and forward == backward else "not symmetric on this pair"
    vi, vk, vj = witness
    forward = _line_cost(pairs, vi, vj)
    left, right = _line_cost(pairs, vi, vk), _line_cost(pairs, vk, vj)
    if forward is None or left is None or right is None:
        return "pair without an edge"
    if forward < left or forward < right or forward > left + right:
        return f"({vi},{vj}) = {forward} against {left} and {right}"
    return None


def _shoreline(instance: Instance, name: str, pairs) -> PropertyCheck:
    """Nodes are taken in their natural order along the line."""
    nodes = _ordered_nodes(instance)
    for i, vi in enumerate(nodes):
        witnesses = [(vi,)]
        for j in range(i + 1, len(nodes)):
            witnesses.append((vi, nodes[j]))
            witnesses.extend((vi, nodes[k], nodes[j]) for k in range(i + 1, j))
        for witness in witnesses:
            fault = _shoreline_fault(pairs, witness)
            if fault is not None:
                return PropertyCheck(name, 'shoreline', VIOLATED, witness, f"{name}: {fault}")
    return PropertyCheck(name, 'shoreline', VERIFIED)


def check_properties(instance: Instance, props: Iterable[str], name: str = 'c',
                     alpha: Optional[Fraction] = None) -> PropertyReport:
    """
    Check the given properties of an edge table regardless of any declaration.

    Args:
        instance: instance holding the table
        props: property names out of ``CHECKED`` and ``DECLARED_ONLY_TAGS``
        name: table name
        alpha: constant for ``α-triangle``

    Returns:
        PropertyReport: one entry per property, in the order given
    """
    pairs = pair_costs(instance, name)
    checks = []
    for prop in props:
        if prop == 'identity':
            checks.append(_identity(instance, name))
        elif prop == 'symmetric':
            checks.append(_symmetric(instance, name))
        elif prop == 'triangle':
            checks.append(_triangle(instance, name, pairs))
        elif prop == 'α-triangle':
            if alpha is None:
                checks.append(PropertyCheck(name, prop, DECLARED_ONLY, detail='no value for α'))
            else:
                checks.append(_triangle(instance, name, pairs, Fraction(alpha), prop))
        elif prop == 'euclidean':
            checks.append(_euclidean(instance, name))
        elif prop == 'shoreline':
            checks.append(_shoreline(instance, name, pairs))
        else:
            checks.append(PropertyCheck(name, prop, DECLARED_ONLY))
    return PropertyReport(tuple(checks))


def check_declared_properties(instance: Instance, variant: ResolvedVariant) -> PropertyReport:
    """
    Verify every property the variant declares for its edge cost functions.

    Named properties expand into the parameters they imply; metric becomes
    identity, symmetric and triangle. Euclidean tags additionally compare
    the costs against the coordinates.
    """
    undirected = variant.tour.edgetype == 'undirected'
    checks = []
    for signature in variant.costs:
        prop = signature.declared_property
        if prop is None or signature.domain != EDGES or not instance.has_table(signature.name):
            continue
        wanted = [param for param in ('identity', 'symmetric', 'triangle', 'α-triangle')
                  if param in prop.effective_params(undirected)]
        if prop.is_euclidean():
            wanted.append('euclidean')
        elif prop.tag in ('shoreline',) + DECLARED_ONLY_TAGS:
            wanted.append(prop.tag)
        alpha = instance.params.get(prop.alpha) if prop.alpha else None
        checks.extend(check_properties(instance, wanted, signature.name, alpha).checks)
    return PropertyReport(tuple(checks))


def recheck(instance: Instance, check: PropertyCheck, alpha: Optional[Fraction] = None) -> bool:
    """
    Re-evaluate a violation from its witness alone.

    Returns:
        bool: True if the witness still shows the violation
    """
    if check.status != VIOLATED or check.witness is None:
        return False
    pairs = pair_costs(instance, check.cost)
    if check.prop in ('triangle', 'α-triangle'):
        u, w, v = check.witness
        factor = Fraction(1) if check.prop == 'triangle' else Fraction(alpha)
        return pairs[(u, v)] > factor * (pairs[(u, w)] + pairs[(w, v)])
    if check.prop == 'identity':
        edge = instance.graph.edge(check.witness[0])
        value = instance.table(check.cost).value(edge.id)
        return (value > 0) != (not edge.is_loop())
    if check.prop == 'symmetric':
        edge = instance.graph.edge(check.witness[0])
        table = instance.table(check.cost)
        reverse = [table.value(other.id) for other in instance.graph.edges_between(edge.head, edge.tail)]
        return table.value(edge.id) not in reverse
    if check.prop == 'euclidean':
        return _off_distance(instance, check.cost, instance.graph.edge(check.witness[0])) is not None
    if check.prop == 'shoreline':
        return _shoreline_fault(pairs, check.witness) is not None
    return False
