#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Finite multigraphs with uniformly directed, undirected or bidirected edges.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Tuple

from core.errors import T3coError

UNDIRECTED = 'undirected'
DIRECTED = 'directed'
BIDIRECTED = 'bidirected'
DIRECTIONS = (UNDIRECTED, DIRECTED, BIDIRECTED)

_NUMERIC_ID = re.compile(r'^\d+$')


def node_sort_key(node_id: str):
    """Natural order for node ids: numeric ids by value first, then the rest lexicographically."""
    if _NUMERIC_ID.match(node_id):
        return (0, int(node_id), node_id)
    return (1, 0, node_id)


def sequence_key(node_ids: Iterable[str]):
    return tuple(node_sort_key(n) for n in node_ids)


@dataclass(frozen=True)
class Edge:
    id: str
    tail: str
    head: str

    @property
    def endpoints(self) -> Tuple[str, str]:
        return (self.tail, self.head)

    def is_loop(self) -> bool:
        return self.tail == self.head


@dataclass(frozen=True)
class Graph:
    """
    Multigraph G = (V, E).

    Parallel edges are allowed and told apart by their id. Directedness is a
    property of the whole graph; a bidirected graph is a directed graph that
    contains the reverse of every edge.
    """
    nodes: Tuple[str, ...]
    edges: Tuple[Edge, ...]
    direction: str = UNDIRECTED
    _node_set: frozenset = field(init=False, repr=False, compare=False)
    _edge_index: Dict[str, Edge] = field(init=False, repr=False, compare=False)
    _adjacency: Dict[Tuple[str, str], Tuple[Edge, ...]] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.direction not in DIRECTIONS:
            raise T3coError(f"Unknown graph direction: {self.direction}")
        if len(set(self.nodes)) != len(self.nodes):
            raise T3coError("Duplicate node id in graph")
        node_set = set(self.nodes)
        edge_index = {}
        adjacency: Dict[Tuple[str, str], List[Edge]] = {}
        for edge in self.edges:
            if edge.id in edge_index:
                raise T3coError(f"Duplicate edge id: {edge.id}")
            if edge.id in node_set:
                raise T3coError(f"Edge id clashes with a node id: {edge.id}")
            for endpoint in edge.endpoints:
                if endpoint not in node_set:
                    raise T3coError(f"Edge {edge.id} references undeclared node {endpoint}")
            edge_index[edge.id] = edge
            adjacency.setdefault((edge.tail, edge.head), []).append(edge)
            if self.direction == UNDIRECTED and not edge.is_loop():
                adjacency.setdefault((edge.head, edge.tail), []).append(edge)
        if self.direction == BIDIRECTED:
            for edge in self.edges:
                if (edge.head, edge.tail) not in adjacency:
                    raise T3coError(f"Bidirected graph lacks the reverse of edge {edge.id}")
        object.__setattr__(self, '_node_set', frozenset(node_set))
        object.__setattr__(self, '_edge_index', edge_index)
        object.__setattr__(self, '_adjacency', {k: tuple(v) for k, v in adjacency.items()})

    @property
    def is_directed(self) -> bool:
        return self.direction != UNDIRECTED

    def has_node(self, node_id: str) -> bool:
        return node_id in self._node_set

    def has_edge(self, edge_id: str) -> bool:
        return edge_id in self._edge_index

    def edge(self, edge_id: str) -> Edge:
        return self._edge_index[edge_id]

    def edges_between(self, u: str, v: str) -> Tuple[Edge, ...]:
        """Edges usable to move from u to v (either orientation when undirected)."""
        return self._adjacency.get((u, v), ())

    def traverse(self, edge_id: str, from_node: str):
        """
        Node reached by crossing an edge from a given node.

        Returns:
            str or None: the other endpoint, or None if the edge cannot be
            entered from ``from_node`` in this graph.
        """
        edge = self._edge_index[edge_id]
        if edge.tail == from_node:
            return edge.head
        if not self.is_directed and edge.head == from_node:
            return edge.tail
        return None

    def sorted_nodes(self) -> List[str]:
        return sorted(self.nodes, key=node_sort_key)

    def is_complete(self) -> bool:
        """Every ordered pair of distinct nodes is joined by a usable edge."""
        for u in self.nodes:
            for v in self.nodes:
                if u != v and not self.edges_between(u, v):
                    return False
        return True

    def to_networkx(self, weights=None):
        """
        Build the matching networkx multigraph.

        Args:
            weights: optional mapping edge id -> weight stored as ``weight``

        Returns:
            networkx.MultiGraph or networkx.MultiDiGraph keyed by edge id
        """
        import networkx as nx

        nx_graph = nx.MultiDiGraph() if self.is_directed else nx.MultiGraph()
        nx_graph.add_nodes_from(self.nodes)
        for edge in self.edges:
            attrs = {}
            if weights is not None:
                attrs['weight'] = weights[edge.id]
            nx_graph.add_edge(edge.tail, edge.head, key=edge.id, **attrs)
        return nx_graph
