#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Walks, visits and traversals.

A walk is written as the alternating sequence of node occurrences and edges it
passes. Nodes may be dropped from the sequence: such a node is traversed but
not visited, and the fully explicit walk it stems from (the originating proper
walk) is restored from the edge sequence. A node may also stay explicit and be
marked as passed through only (``visited=False``, written ``v!`` in text).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple, Union

from core.errors import AmbiguityError, T3coError, WalkIndexError, WalkReferenceError
from core.graph import Graph


@dataclass(frozen=True)
class NodeVisit:
    node: str
    visited: bool = True

    def __str__(self):
        return self.node if self.visited else f"{self.node}!"


@dataclass(frozen=True)
class EdgeStep:
    edge: str

    def __str__(self):
        return self.edge


Item = Union[NodeVisit, EdgeStep]


@dataclass(frozen=True)
class Walk:
    items: Tuple[Item, ...]
    graph: Optional[Graph] = field(default=None, compare=False, repr=False)

    @classmethod
    def from_ids(cls, ids: Sequence[str], graph: Graph) -> 'Walk':
        """
        Build a walk from node and edge ids.

        Node ids may carry a trailing ``!`` to mark a traversed but not visited
        occurrence.

        Raises:
            WalkReferenceError: If an id is neither a node nor an edge of the graph
        """
        items: List[Item] = []
        for raw in ids:
            ident = raw.strip()
            passed_only = ident.endswith('!')
            if passed_only:
                ident = ident[:-1]
            if graph.has_node(ident):
                items.append(NodeVisit(ident, not passed_only))
            elif graph.has_edge(ident) and not passed_only:
                items.append(EdgeStep(ident))
            else:
                raise WalkReferenceError(raw, 'node' if passed_only else 'node or edge')
        return cls(tuple(items), graph)

    def bind(self, graph: Graph) -> 'Walk':
        return Walk(self.items, graph)

    @property
    def edge_ids(self) -> Tuple[str, ...]:
        return tuple(item.edge for item in self.items if isinstance(item, EdgeStep))

    @property
    def node_items(self) -> Tuple[NodeVisit, ...]:
        return tuple(item for item in self.items if isinstance(item, NodeVisit))

    def is_proper(self) -> bool:
        """Every node between two edges and at both ends is explicit."""
        if not self.items:
            return False
        if not isinstance(self.items[0], NodeVisit) or not isinstance(self.items[-1], NodeVisit):
            return False
        return all(isinstance(a, NodeVisit) != isinstance(b, NodeVisit)
                   for a, b in zip(self.items, self.items[1:]))

    def _require_graph(self) -> Graph:
        if self.graph is None:
            raise T3coError("Walk is not bound to a graph")
        return self.graph

    def __str__(self):
        return format_walk(self)


def format_walk(walk: Walk) -> str:
    return ' '.join(str(item) for item in walk.items)


_SEPARATORS = re.compile(r'[\s,()]+')


def parse_walk_text(text: str, graph: Graph) -> Walk:
    """Parse ``v1 e1 v2!`` style text (commas and surrounding parentheses allowed)."""
    ids = [token for token in _SEPARATORS.split(text) if token]
    return Walk.from_ids(ids, graph)


def _check_references(graph: Graph, walk: Walk):
    for item in walk.items:
        if isinstance(item, NodeVisit) and not graph.has_node(item.node):
            raise WalkReferenceError(item.node, 'node')
        if isinstance(item, EdgeStep) and not graph.has_edge(item.edge):
            raise WalkReferenceError(item.edge, 'edge')


def _start_candidates(graph: Graph, walk: Walk) -> List[str]:
    first = walk.items[0]
    if isinstance(first, NodeVisit):
        return [first.node]
    edge = graph.edge(first.edge)
    if graph.is_directed:
        return [edge.tail]
    return [edge.tail] if edge.is_loop() else [edge.tail, edge.head]


def _expand_from(graph: Graph, walk: Walk, start: str) -> Optional[Tuple[Item, ...]]:
    items = walk.items
    out: List[Item] = []
    if isinstance(items[0], NodeVisit):
        out.append(items[0])
        index = 1
    else:
        out.append(NodeVisit(start))
        index = 0
    current = start
    while index < len(items):
        item = items[index]
        if isinstance(item, NodeVisit):
            # two node occurrences in a row
            return None
        reached = graph.traverse(item.edge, current)
        if reached is None:
            return None
        out.append(item)
        following = items[index + 1] if index + 1 < len(items) else None
        if isinstance(following, NodeVisit):
            if following.node != reached:
                return None
            out.append(following)
            index += 2
        else:
            out.append(NodeVisit(reached))
            index += 1
        current = reached
    return tuple(out)


def _reconstructions(graph: Graph, walk: Walk) -> List[Tuple[Item, ...]]:
    _check_references(graph, walk)
    if not walk.items:
        return []
    found = []
    for start in _start_candidates(graph, walk):
        expanded = _expand_from(graph, walk, start)
        if expanded is not None and expanded not in found:
            found.append(expanded)
    return found


def is_valid_walk(graph: Graph, walk: Walk) -> bool:
    """
    Check that a (possibly non-proper) walk is consistent with the graph.

    Raises:
        WalkReferenceError: If the walk names an unknown node or edge
    """
    return bool(_reconstructions(graph, walk))


def originating_proper_walk(graph: Graph, walk: Walk) -> Walk:
    """
    Restore the fully node-explicit walk a walk with dropped nodes stems from.

    Restored nodes count as visited in the returned walk; explicit
    occurrences keep their flag, so proper walks are returned unchanged.

    Raises:
        WalkReferenceError: If the walk names an unknown node or edge
        AmbiguityError: If more than one proper walk fits, which happens only
            for edge-only walks between the same two nodes of an undirected graph
        T3coError: If the walk is not valid in the graph
    """
    found = _reconstructions(graph, walk)
    if not found:
        raise T3coError(f"Not a valid walk in this graph: {format_walk(walk)}")
    if len(found) > 1:
        raise AmbiguityError(
            f"Cannot restore the originating proper walk of {format_walk(walk)}",
            [format_walk(Walk(candidate)) for candidate in found])
    return Walk(found[0], graph)


def _closed_explicitly(items: Tuple[Item, ...]) -> bool:
    if len(items) < 3:
        return False
    first, last = items[0], items[-1]
    return (isinstance(first, NodeVisit) and isinstance(last, NodeVisit)
            and first.node == last.node
            and any(isinstance(item, EdgeStep) for item in items))


def counted_visits(walk: Walk) -> Tuple[str, ...]:
    """
    Visited nodes in order, with the closing endpoint of a closed walk counted once.
    """
    visited = [item.node for item in walk.items if isinstance(item, NodeVisit) and item.visited]
    items = walk.items
    if _closed_explicitly(items) and items[0].visited and items[-1].visited:
        visited.pop()
    return tuple(visited)


def visits_count(walk: Walk, node: str) -> int:
    return counted_visits(walk).count(node)


def counted_traversals(walk: Walk) -> Tuple[str, ...]:
    proper = originating_proper_walk(walk._require_graph(), walk)
    traversed = [item.node for item in proper.node_items]
    if _closed_explicitly(proper.items):
        traversed.pop()
    return tuple(traversed)


def traversals_count(walk: Walk, node: str) -> int:
    """
    Raises:
        AmbiguityError: If the originating proper walk cannot be restored
    """
    return counted_traversals(walk).count(node)


def is_closed(walk: Walk) -> bool:
    """True iff the walk has an edge and its first and last traversed nodes coincide."""
    proper = originating_proper_walk(walk._require_graph(), walk)
    return _closed_explicitly(proper.items)


class WalkParts:
    """
    Accessors for the parts of a walk S.

    Visited positions are indexed from 0, so ``visited_at(0)`` is the first
    visited node and ``prefix_upto(0)`` ends with it.
    """

    def __init__(self, walk: Walk):
        self.walk = walk
        self._visit_positions = [pos for pos, item in enumerate(walk.items)
                                 if isinstance(item, NodeVisit) and item.visited]

    @property
    def visited_sequence(self) -> Tuple[str, ...]:
        """S_V"""
        return tuple(self.walk.items[pos].node for pos in self._visit_positions)

    @property
    def visited_set(self) -> frozenset:
        """V_S"""
        return frozenset(self.visited_sequence)

    @property
    def edge_sequence(self) -> Tuple[str, ...]:
        """S_E"""
        return self.walk.edge_ids

    @property
    def edge_set(self) -> frozenset:
        """E_S"""
        return frozenset(self.walk.edge_ids)

    def __len__(self):
        return len(self._visit_positions)

    def _position(self, i: int) -> int:
        if not 0 <= i < len(self._visit_positions):
            raise WalkIndexError(f"Visited-node index {i} out of range 0..{len(self._visit_positions) - 1}")
        return self._visit_positions[i]

    def visited_at(self, i: int) -> str:
        """S_i"""
        return self.walk.items[self._position(i)].node

    def prefix_upto(self, i: int) -> Walk:
        """S_{≤i}"""
        return Walk(self.walk.items[:self._position(i) + 1], self.walk.graph)

    def prefix_before(self, i: int) -> Walk:
        """S_{<i}"""
        return Walk(self.walk.items[:self._position(i)], self.walk.graph)

    def start(self) -> str:
        proper = originating_proper_walk(self.walk._require_graph(), self.walk)
        return proper.items[0].node

    def end(self) -> str:
        proper = originating_proper_walk(self.walk._require_graph(), self.walk)
        return proper.items[-1].node


def walk_parts(walk: Walk) -> WalkParts:
    return WalkParts(walk)
