#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Minimum-weight perfect matching for the odd-degree nodes of a spanning tree.

The blossom algorithm in networkx does the work. Exact weights are scaled to
integers over a common denominator first, so its slack arithmetic never
leaves the integers.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Callable, List, Sequence, Tuple

import networkx as nx

from core.costs import Value
from core.errors import PreconditionError
from core.graph import node_sort_key


def _common_denominator(weights) -> int:
    return lcm(*(Fraction(w).denominator for w in weights))


def min_weight_perfect_matching(nodes: Sequence[str],
                                weight: Callable[[str, str], Value]) -> List[Tuple[str, str]]:
    """
    Pair up all nodes at minimum total weight.

    Args:
        nodes: an even number of distinct node ids
        weight: symmetric, finite pair weight

    Returns:
        list: pairs (u, v) with u before v in node order, sorted by u

    Raises:
        PreconditionError: Odd node count
    """
    ordered = sorted(nodes, key=node_sort_key)
    n = len(ordered)
    if n % 2:
        raise PreconditionError(f"Perfect matching needs an even number of nodes, got {n}")
    if n == 0:
        return []

    weights = {(u, v): weight(u, v) for i, u in enumerate(ordered) for v in ordered[i + 1:]}
    scale = _common_denominator(weights.values())
    complete = nx.Graph()
    complete.add_nodes_from(ordered)
    for (u, v), value in weights.items():
        complete.add_edge(u, v, weight=int(Fraction(value) * scale))

    position = {node: index for index, node in enumerate(ordered)}
    pairs = [tuple(sorted(pair, key=position.get)) for pair in nx.min_weight_matching(complete)]
    if 2 * len(pairs) != n:
        raise PreconditionError(f"No perfect matching found on {n} nodes")
    return sorted(pairs, key=lambda pair: position[pair[0]])
