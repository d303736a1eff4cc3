#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Binding checks between a resolved variant and an instance.
"""

from __future__ import annotations

from typing import Iterable

from core.costs import EDGES, NODES, CostFunction, parse_value, range_contains
from core.errors import BindingError, RangeError, UnsupportedError
from instances.model import Instance
from semantics.model import CostSignature, ResolvedVariant
from semantics.objectives import (
    AVAILABILITY, DEMAND, EPSILON_SYMBOLS, LowerBound, MaxLateness, PurchaseDemand, TimeWindow,
    UpperBound, WindowBound,
)
from utils.log import get_logger

logger = get_logger(__name__)

# cost functions whose values come from the schedule or the solution, not the instance
SCHEDULE_TEMPORAL = ('waiting',)


def is_solution_supplied(signature: CostSignature) -> bool:
    """Partial functions (shares) are part of a solution; waiting times come from the schedule."""
    if signature.partial:
        return True
    return signature.temporal is not None and signature.temporal.tag in SCHEDULE_TEMPORAL


def epsilon_value(instance: Instance):
    for symbol in EPSILON_SYMBOLS:
        if symbol in instance.params:
            return instance.params[symbol]
    raise BindingError("Instance has no parameter ε (or epsilon)")


def _elements(instance: Instance, domain: str) -> Iterable:
    if domain == EDGES:
        return [edge.id for edge in instance.graph.edges]
    if domain == NODES:
        return list(instance.graph.nodes)
    return []


def _check_table(instance: Instance, signature: CostSignature, table: CostFunction):
    if table.domain != signature.domain:
        raise BindingError(
            f"Table {table.name} is over {table.domain}, the variant declares {signature.name} over {signature.domain}")
    missing = [element for element in _elements(instance, table.domain) if element not in table.values]
    if missing:
        raise BindingError(f"Table {table.name} has no value for {', '.join(missing)}")
    for element, value in table.values.items():
        if not _in_declared_range(signature.range_tag, value):
            raise RangeError(f"Value {value} of {table.name}({element}) outside {signature.range_tag}")
    temporal = signature.temporal
    if temporal is not None and temporal.tag in ('time', 'costzone') and (
            table.temporal is None or table.temporal.kind != 'time'):
        raise BindingError(f"Table {table.name} needs time breakpoints for temporal={temporal.tag}")
    if temporal is not None and temporal.tag in ('position', 'poszone') and (
            table.temporal is None or table.temporal.kind != 'position'):
        raise BindingError(f"Table {table.name} needs position breakpoints for temporal={temporal.tag}")


def _in_declared_range(range_tag: str, value) -> bool:
    for part in range_tag.split('∪'):
        if range_contains(part.strip(), value):
            return True
    return False


def _bind_signature(instance: Instance, signature: CostSignature):
    if is_solution_supplied(signature):
        return
    if signature.temporal is not None and signature.temporal.tag == 'kinetic':
        return
    if signature.is_family:
        family = instance.family(signature.base)
        count = instance.product_count()
        if count == 0:
            raise BindingError(f"Instance has no tables for family {signature.base}")
        for index in range(1, count + 1):
            if index not in family:
                raise BindingError(f"Instance has no table {signature.base}_{index}")
            _check_table(instance, signature, family[index])
        return
    _check_table(instance, signature, instance.table(signature.name))


def _bind_window_side(instance: Instance, bound: WindowBound):
    if bound.per_node:
        table = instance.table(bound.symbol)
        if table.domain != NODES:
            raise BindingError(f"Time window bound {bound.symbol} must be a node table")
    else:
        instance.param(bound.symbol)
    if bound.eps_scale:
        epsilon_value(instance)
    if bound.handling:
        instance.table(bound.handling)


def _bind_statement(instance: Instance, statement):
    if isinstance(statement, (UpperBound, LowerBound)) and statement.bound.symbol is not None:
        instance.param(statement.bound.symbol)
    elif isinstance(statement, TimeWindow):
        for bound in (statement.release, statement.deadline):
            if bound is not None:
                _bind_window_side(instance, bound)
    elif isinstance(statement, MaxLateness):
        instance.table(statement.deadline)
    elif isinstance(statement, PurchaseDemand):
        count = instance.product_count()
        if statement.kind == DEMAND and statement.bound.symbol is not None:
            for index in range(1, count + 1):
                instance.param(f"{statement.bound.symbol}_{index}")
        elif statement.kind == AVAILABILITY:
            family = instance.family(statement.bound.symbol)
            if len(family) < count:
                raise BindingError(f"Instance has {len(family)} {statement.bound.symbol} tables, expected {count}")


def _bind_groups(instance: Instance, groups, kind: str, what: str):
    if not groups:
        raise BindingError(f"Variant declares a {what} but the instance has none")
    covered = set()
    for group in groups:
        if kind in ('partition', 'bipartition', 'k-partition') and covered & set(group.nodes):
            raise BindingError(f"{what.capitalize()} {group.index} overlaps another {what}; a partition needs disjoint sets")
        covered |= set(group.nodes)
    uncovered = [node for node in instance.graph.nodes if node not in covered]
    if uncovered:
        raise BindingError(f"Nodes outside every {what}: {', '.join(uncovered)}")
    if kind == 'bipartition' and len(groups) != 2:
        raise BindingError(f"A bipartition needs exactly two {what}s, the instance has {len(groups)}")


def bind(instance: Instance, variant: ResolvedVariant) -> Instance:
    """
    Check that an instance provides every symbol a variant needs.

    Args:
        instance: loaded instance
        variant: resolved variant

    Returns:
        Instance: the same instance, for chaining

    Raises:
        BindingError: Missing table, parameter or node structure
        RangeError: Table value outside the range the variant declares
        UnsupportedError: Template variants have nothing to bind against
    """
    if variant.is_template:
        raise UnsupportedError("Template definitions cannot be bound to an instance")
    for signature in variant.costs:
        _bind_signature(instance, signature)
    for statement in variant.objectives:
        _bind_statement(instance, statement)

    traversal = variant.traversal
    if traversal.amount == 'd':
        instance.param('d')
    elif traversal.per_node:
        table = instance.table('d')
        if table.domain != NODES:
            raise BindingError("Per-node traversal demand d(v) must be a node table")

    tour = variant.tour
    if tour.start and instance.start_node is None:
        raise BindingError("Variant fixes the start node but the instance has no s")
    if tour.end and instance.end_node is None:
        raise BindingError("Variant fixes the end node but the instance has no t")
    if variant.group is not None:
        _bind_groups(instance, instance.groups, variant.group.kind, 'group')
    if tour.cluster is not None:
        _bind_groups(instance, instance.clusters, tour.cluster.kind, 'cluster')
        sequence = tour.cluster.sequence
        for cluster in instance.clusters:
            if sequence in ('start', 'startend') and cluster.start is None:
                raise BindingError(f"Cluster {cluster.index} has no start node")
            if sequence == 'startend' and cluster.end is None:
                raise BindingError(f"Cluster {cluster.index} has no end node")
            if sequence == 'terminals' and not cluster.terminals:
                raise BindingError(f"Cluster {cluster.index} has no terminals")
    if variant.covering is not None:
        covering = variant.covering
        instance.table(covering.cost)
        try:
            instance.param(covering.bound)
        except BindingError:
            parse_value(covering.bound)
        if covering.scope == 'subset' and not instance.nodeset:
            raise BindingError("Variant covers a node subset but the instance has no NODESET")
    if tour.precedences == 'atomic' and not instance.precedences:
        logger.warning("Variant declares atomic precedences but the instance lists none")
    if any(s.temporal is not None and s.temporal.tag == 'kinetic' for s in variant.costs) and not instance.kinetic:
        raise BindingError("Variant declares kinetic costs but the instance has no KINETIC section")
    return instance
