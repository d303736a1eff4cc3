#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Consistency rules over a resolved variant that the resolver itself does not
enforce.
"""

from __future__ import annotations

from typing import List

from core.costs import EDGES, NODES
from core.diagnostics import ERROR, NOTE, WARNING, Diagnostic
from semantics.model import ResolvedVariant
from semantics.objectives import MaxLateness, MaxMinEdge, MinMaxEdge, TimeWindow
from semantics.registry import CLUSTER_ORDER_WORDS, CLUSTER_SEQUENCE_WORDS

SHARE = 'share'

_ARITY = {'grid': 2, 'tree': 1, 'costzone': 1, 'poszone': 1}
_GRAPH_TAGS = ('arbitrary', 'complete', 'strongly connected', 'planar', 'path', 'cycle', 'binary tree', 'tree')


def _arity(tag: str, args, where: str) -> List[Diagnostic]:
    expected = _ARITY.get(tag)
    if tag == 'tree' and not args:
        return []
    if expected is not None and len(args) != expected:
        return [Diagnostic(ERROR, 'arity', f"{where}: {tag} takes {expected} parameter(s), got {len(args)}")]
    if expected is None and args:
        return [Diagnostic(ERROR, 'arity', f"{where}: {tag} takes no parameters")]
    return []


def check_wellformed(variant: ResolvedVariant) -> List[Diagnostic]:
    """
    Report violations of the attribute rules.

    Covers traveler counts other than one, cost symbols used by objectives or
    covering without a signature, parameter arity of grid, tree, costzone
    and poszone, cluster parameters, and domain mismatches.

    Returns:
        list: Diagnostic entries, empty for a clean definition
    """
    diagnostics: List[Diagnostic] = []
    if not variant.count.is_single():
        diagnostics.append(Diagnostic(
            ERROR, 'traveler-count',
            f"count {variant.count} describes several travelers; only single-traveler variants are executable"))

    for statement in variant.objectives:
        for ref in statement.cost_refs():
            # shares are decided by the solution
            if ref.split('_', 1)[0] != SHARE and variant.cost(ref) is None:
                diagnostics.append(Diagnostic(
                    ERROR, 'unhoused-symbol',
                    f"Objective {statement.label()!r} uses {ref} but no cost function {ref} is declared"))
        if isinstance(statement, (MinMaxEdge, MaxMinEdge)):
            signature = variant.cost(statement.cost)
            if signature is not None and signature.domain != EDGES:
                diagnostics.append(Diagnostic(
                    ERROR, 'domain', f"{statement.label()!r} aggregates over edges but {signature.name} is not an edge cost"))
        if isinstance(statement, (TimeWindow, MaxLateness)) and statement.handling:
            signature = variant.cost(statement.handling)
            if signature is not None and signature.domain != NODES:
                diagnostics.append(Diagnostic(
                    ERROR, 'domain', f"Handling time {signature.name} must be a node cost"))

    if variant.covering is not None and variant.cost(variant.covering.cost) is None:
        diagnostics.append(Diagnostic(
            ERROR, 'unhoused-symbol', f"covering measures distances with {variant.covering.cost}, which is not declared"))

    graphtype = variant.tour.graphtype
    if graphtype.tag not in _GRAPH_TAGS:
        diagnostics.append(Diagnostic(ERROR, 'graphtype', f"Unknown graphtype {graphtype.tag}"))
    diagnostics.extend(_arity(graphtype.tag, graphtype.args, 'graphtype'))

    cluster = variant.tour.cluster
    if cluster is not None:
        sequences = [param for param in cluster.params if param in CLUSTER_SEQUENCE_WORDS]
        for param in cluster.params:
            if param not in CLUSTER_ORDER_WORDS and param not in CLUSTER_SEQUENCE_WORDS:
                diagnostics.append(Diagnostic(ERROR, 'cluster-param', f"Unknown cluster parameter {param}"))
        if len(sequences) > 1:
            diagnostics.append(Diagnostic(
                ERROR, 'cluster-param', f"cluster takes one sequence parameter, got {', '.join(sequences)}"))

    for signature in variant.costs:
        prop = signature.declared_property
        if prop is not None:
            if signature.domain != EDGES:
                diagnostics.append(Diagnostic(
                    WARNING, 'property-domain',
                    f"Property of {signature.name} only applies to edge cost functions"))
            if prop.tag is not None:
                diagnostics.extend(_arity(prop.tag, prop.args, signature.name))
        if signature.temporal is not None:
            diagnostics.extend(_arity(signature.temporal.tag, signature.temporal.args, signature.name))

    if variant.is_template:
        names = ', '.join(f"{item.field}.{item.name}" for item in variant.open_attributes)
        diagnostics.append(Diagnostic(NOTE, 'template', f"Template definition with open attributes: {names}"))
    if variant.has_extension:
        diagnostics.append(Diagnostic(NOTE, 'extension', "Side conditions after ⊕ are carried but not checked"))
    return diagnostics
