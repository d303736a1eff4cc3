#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Classical tour construction baselines: nearest neighbor, double tree and
Christofides. All of them build a closed tour through every node of a
complete graph and break ties by node order.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from core.costs import Value
from core.errors import PreconditionError
from core.graph import node_sort_key
from core.walk import EdgeStep, NodeVisit, Walk
from instances.model import Instance
from instances.properties import check_properties, pair_costs
from solvers.matching import min_weight_perfect_matching
from utils.log import get_logger
from validator.solution import Solution

logger = get_logger(__name__)


def cheapest_edge(instance: Instance, u: str, v: str, name: str = 'c') -> str:
    """Id of the cheapest edge usable from u to v; ties go to the smallest edge id."""
    table = instance.table(name)
    edges = instance.graph.edges_between(u, v)
    if not edges:
        raise PreconditionError(f"No edge from {u} to {v}")
    return min(edges, key=lambda edge: (table.value(edge.id), node_sort_key(edge.id))).id


def tour_walk(instance: Instance, order: Sequence[str], name: str = 'c') -> Walk:
    """
    Closed walk visiting the nodes in the given order over cheapest edges.

    A single node gives the trivial walk without edges.
    """
    items = [NodeVisit(order[0])]
    if len(order) > 1:
        for u, v in zip(order, list(order[1:]) + [order[0]]):
            items.append(EdgeStep(cheapest_edge(instance, u, v, name)))
            items.append(NodeVisit(v))
    return Walk(tuple(items), instance.graph)


def _require_complete(instance: Instance, name: str) -> Dict[Tuple[str, str], Value]:
    if not instance.graph.nodes:
        raise PreconditionError("Instance has no nodes")
    if not instance.graph.is_complete():
        raise PreconditionError("Tour heuristics need a complete graph")
    pairs = pair_costs(instance, name)
    negative = [pair for pair, value in pairs.items() if value < 0]
    if negative:
        u, v = negative[0]
        raise PreconditionError(f"Negative cost {name}({u},{v})")
    return pairs


def _require_metric(instance: Instance, name: str) -> Dict[Tuple[str, str], Value]:
    pairs = _require_complete(instance, name)
    report = check_properties(instance, ('symmetric', 'triangle'), name)
    for check in report.checks:
        if not check.holds:
            raise PreconditionError(f"Cost {name} is not {check.prop}: {check.detail}")
    return pairs


def nearest_neighbor(instance: Instance, start: Optional[str] = None, name: str = 'c') -> Solution:
    """
    Greedy tour: always move to the cheapest unvisited node.

    Args:
        instance: complete instance with nonnegative costs
        start: first node, the smallest node id by default
        name: edge cost table

    Raises:
        PreconditionError: Incomplete graph, negative cost or unknown start
    """
    pairs = _require_complete(instance, name)
    nodes = instance.graph.sorted_nodes()
    current = nodes[0] if start is None else start
    if not instance.graph.has_node(current):
        raise PreconditionError(f"Unknown start node {current}")

    order = [current]
    remaining = [node for node in nodes if node != current]
    while remaining:
        current = min(remaining, key=lambda node: (pairs[(current, node)], node_sort_key(node)))
        order.append(current)
        remaining.remove(current)
    logger.debug(f"Nearest neighbor tour: {' '.join(order)}")
    return Solution(tour_walk(instance, order, name))


def _spanning_tree(nodes: List[str], pairs: Dict[Tuple[str, str], Value]) -> nx.Graph:
    complete = nx.Graph()
    complete.add_nodes_from(nodes)
    for i, u in enumerate(nodes):
        for v in nodes[i + 1:]:
            complete.add_edge(u, v, weight=pairs[(u, v)])
    tree = nx.minimum_spanning_tree(complete, algorithm='kruskal')
    # rebuild with sorted adjacency so traversals follow node order
    ordered = nx.Graph()
    ordered.add_nodes_from(nodes)
    position = {node: index for index, node in enumerate(nodes)}
    edges = sorted((tuple(sorted(edge, key=position.get)) for edge in tree.edges()),
                   key=lambda edge: (position[edge[0]], position[edge[1]]))
    ordered.add_edges_from(edges)
    return ordered


def _shortcut(sequence) -> List[str]:
    order = []
    for node in sequence:
        if node not in order:
            order.append(node)
    return order


def double_tree(instance: Instance, name: str = 'c') -> Solution:
    """
    Preorder walk of a minimum spanning tree, shortcut to a tour.

    Raises:
        PreconditionError: Incomplete graph, or costs not verified symmetric
            and satisfying the triangle inequality
    """
    pairs = _require_metric(instance, name)
    nodes = instance.graph.sorted_nodes()
    tree = _spanning_tree(nodes, pairs)
    order = list(nx.dfs_preorder_nodes(tree, source=nodes[0]))
    logger.debug(f"Double tree tour: {' '.join(order)}")
    return Solution(tour_walk(instance, order, name))


def christofides(instance: Instance, name: str = 'c') -> Solution:
    """
    Spanning tree plus a minimum-weight perfect matching on its
    odd-degree nodes, then an Eulerian circuit shortcut to a tour.

    Raises:
        PreconditionError: Fewer than 3 nodes, incomplete graph, or costs not
            verified symmetric and satisfying the triangle inequality
    """
    if len(instance.graph.nodes) < 3:
        raise PreconditionError("Christofides needs at least 3 nodes")
    pairs = _require_metric(instance, name)
    nodes = instance.graph.sorted_nodes()
    tree = _spanning_tree(nodes, pairs)

    odd = [node for node in nodes if tree.degree(node) % 2]
    matching = min_weight_perfect_matching(odd, lambda u, v: pairs[(u, v)])

    multigraph = nx.MultiGraph(tree)
    multigraph.add_edges_from(matching)
    circuit = nx.eulerian_circuit(multigraph, source=nodes[0])
    order = _shortcut([nodes[0]] + [v for _, v in circuit])
    logger.debug(f"Christofides tour: {' '.join(order)} (matched {len(matching)} pairs)")
    return Solution(tour_walk(instance, order, name))
