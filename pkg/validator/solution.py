#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Candidate solutions and their text format.

A solution file holds the walk on the first non-comment lines, then an
optional ``shares:`` section with one purchase per row::

    v1 e1 v2 e2 v3! e3 v4
    shares:
    1 v2 3/2
    2 v4 1

Each share row reads ``product node amount``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Tuple

from core.costs import format_value, parse_value
from core.errors import SchemaError
from core.graph import Graph
from core.walk import Walk, format_walk, parse_walk_text

ShareKey = Tuple[int, str]


@dataclass(frozen=True)
class Solution:
    walk: Walk
    shares: Optional[Mapping[ShareKey, Fraction]] = None

    def share(self, product: int, node: str) -> Fraction:
        if not self.shares:
            return Fraction(0)
        return self.shares.get((product, node), Fraction(0))


def parse_solution_text(text: str, graph: Graph) -> Solution:
    """
    Parse a solution file against the instance graph.

    Raises:
        SchemaError: Malformed share rows or a missing walk
        WalkReferenceError: Unknown node or edge id in the walk
    """
    walk_lines, share_rows = [], []
    in_shares = False
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        if line.rstrip(':').lower() == 'shares':
            in_shares = True
            continue
        (share_rows if in_shares else walk_lines).append((number, line))
    if not walk_lines:
        raise SchemaError("Solution has no walk")
    walk = parse_walk_text(' '.join(line for _, line in walk_lines), graph)
    if not in_shares:
        return Solution(walk)
    shares = {}
    for number, line in share_rows:
        tokens = line.split()
        if len(tokens) != 3 or not tokens[0].isdigit():
            raise SchemaError("Share rows read 'product node amount'", number)
        if not graph.has_node(tokens[1]):
            raise SchemaError(f"Unknown node {tokens[1]} in shares", number)
        key = (int(tokens[0]), tokens[1])
        if key in shares:
            raise SchemaError(f"Duplicate share for product {key[0]} at {key[1]}", number)
        try:
            shares[key] = parse_value(tokens[2])
        except SchemaError:
            raise SchemaError(f"Not a number: {tokens[2]}", number)
    return Solution(walk, shares)


def format_solution(solution: Solution) -> str:
    lines = [format_walk(solution.walk)]
    if solution.shares is not None:
        lines.append('shares:')
        for (product, node), amount in sorted(solution.shares.items()):
            lines.append(f"{product} {node} {format_value(amount)}")
    return '\n'.join(lines) + '\n'
