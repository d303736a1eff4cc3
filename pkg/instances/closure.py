#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Metric closure: the complete graph whose edge costs are shortest-path
distances of the original graph.
"""

from __future__ import annotations

from dataclasses import replace
from typing import Dict, List, Tuple

import networkx as nx

from core.costs import EDGES, NODES, CostFunction
from core.errors import ClosureError
from core.graph import Edge, Graph, node_sort_key
from core.walk import EdgeStep, NodeVisit, Walk, originating_proper_walk
from instances.model import Instance
from utils.log import get_logger

logger = get_logger(__name__)


def closure_edge_id(u: str, v: str) -> str:
    return f"{u}~{v}"


def _cheapest_edge(graph: Graph, table: CostFunction, u: str, v: str) -> str:
    candidates = graph.edges_between(u, v)
    best = min(candidates, key=lambda edge: (table.value(edge.id), node_sort_key(edge.id)))
    return best.id


def _path_items(graph: Graph, table: CostFunction, nodes: List[str]) -> Tuple[str, ...]:
    items = [nodes[0]]
    for u, v in zip(nodes, nodes[1:]):
        items.extend((_cheapest_edge(graph, table, u, v), v))
    return tuple(items)


def metric_closure(instance: Instance, name: str = 'c') -> Instance:
    """
    Replace the graph by its metric closure under edge table ``name``.

    The result is complete on the same nodes, keeps the direction of the
    input (directed inputs use directed shortest paths) and records, for
    every closure edge, the alternating node and edge ids of the shortest
    path it stands for in ``closure_paths``. Node tables are kept; other edge
    tables are dropped.

    Raises:
        ClosureError: If a cost is negative or some ordered pair is unreachable
        BindingError: If the instance has no table ``name``
    """
    graph = instance.graph
    table = instance.table(name)
    if table.domain != EDGES:
        raise ClosureError(f"Table {name} is not an edge cost")
    negative = [edge_id for edge_id, value in table.values.items() if value < 0]
    if negative:
        raise ClosureError(f"Metric closure needs nonnegative costs; {name}({negative[0]}) < 0")

    nx_graph = graph.to_networkx({edge.id: table.value(edge.id) for edge in graph.edges})
    shortest = dict(nx.all_pairs_dijkstra(nx_graph, weight='weight'))
    nodes = sorted(graph.nodes, key=node_sort_key)

    edges: List[Edge] = []
    values: Dict[str, object] = {}
    paths: Dict[str, Tuple[str, ...]] = {}
    for i, u in enumerate(nodes):
        distances, routes = shortest[u]
        for j, v in enumerate(nodes):
            if u == v or (not graph.is_directed and j < i):
                continue
            if v not in distances:
                raise ClosureError(f"Node {v} is unreachable from {u}", (u, v))
            edge_id = closure_edge_id(u, v)
            edges.append(Edge(edge_id, u, v))
            values[edge_id] = distances[v]
            paths[edge_id] = _path_items(graph, table, routes[v])

    dropped = [other for other, t in instance.tables.items() if t.domain != NODES and other != name]
    if dropped:
        logger.warning(f"Metric closure drops edge tables {', '.join(sorted(dropped))}")
    tables = {key: t for key, t in instance.tables.items() if t.domain == NODES}
    tables[name] = CostFunction(name, EDGES, values, table.range_tag)
    closed = Graph(graph.nodes, tuple(edges), graph.direction)
    logger.debug(f"Metric closure of {instance.name or '<unnamed>'}: {len(edges)} edges")
    return replace(instance, graph=closed, tables=tables, closure_paths=paths)


def expand_closure_walk(closed: Instance, original: Instance, walk: Walk) -> Walk:
    """
    Expand a walk over closure edges into the walk over original edges it stands for.

    Nodes passed by the shortest paths appear as traversed but not visited;
    the nodes of the closure walk keep their visited flags.
    """
    proper = originating_proper_walk(closed.graph, walk)
    items = list(proper.items)
    expanded = [items[0]]
    for index in range(1, len(items), 2):
        edge_id = items[index].edge
        target = items[index + 1]
        path = list(closed.closure_paths[edge_id])
        if path[0] != expanded[-1].node:
            path.reverse()
        for position, ident in enumerate(path[1:], start=1):
            if position % 2:
                expanded.append(EdgeStep(ident))
            elif position == len(path) - 1:
                expanded.append(target)
            else:
                expanded.append(NodeVisit(ident, visited=False))
    return Walk(tuple(expanded), original.graph)
