#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Reader for the TSPLIB subset: TYPE TSP or ATSP with EDGE_WEIGHT_TYPE EUC_2D
or EXPLICIT in FULL_MATRIX format.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, List

from core.costs import EDGES, CostFunction, parse_value
from core.errors import SchemaError, UnsupportedFormatError
from core.graph import DIRECTED, UNDIRECTED, Edge, Graph
from instances.model import Instance
from utils.log import get_logger

logger = get_logger(__name__)

SUPPORTED = {
    'TYPE': ('TSP', 'ATSP'),
    'EDGE_WEIGHT_TYPE': ('EUC_2D', 'EXPLICIT'),
    'EDGE_WEIGHT_FORMAT': ('FULL_MATRIX',),
    'NODE_COORD_TYPE': ('TWOD_COORDS',),
    'DISPLAY_DATA_TYPE': ('COORD_DISPLAY', 'NO_DISPLAY'),
}
FREE_TEXT = ('NAME', 'COMMENT', 'DIMENSION')
SECTIONS = ('NODE_COORD_SECTION', 'EDGE_WEIGHT_SECTION')


def nint(value: float) -> int:
    """TSPLIB rounding: ``(int)(x + 0.5)``."""
    return int(value + 0.5)


def euc_2d(a, b) -> int:
    dx = float(a[0]) - float(b[0])
    dy = float(a[1]) - float(b[1])
    return nint(math.sqrt(dx * dx + dy * dy))


def _specification(lines: List[str]):
    spec: Dict[str, str] = {}
    index = 0
    while index < len(lines):
        line = lines[index].strip()
        if not line:
            index += 1
            continue
        keyword = line.split(':', 1)[0].strip().split()[0]
        if keyword in SECTIONS or keyword == 'EOF':
            break
        if ':' not in line:
            raise SchemaError(f"Expected 'KEYWORD : value', got {line!r}", index + 1)
        value = line.split(':', 1)[1].strip()
        if keyword in SUPPORTED:
            if value not in SUPPORTED[keyword]:
                raise UnsupportedFormatError(keyword, value)
        elif keyword not in FREE_TEXT:
            raise UnsupportedFormatError(keyword)
        spec[keyword] = value
        index += 1
    return spec, index


def load_tsplib(text: str) -> Instance:
    """
    Read a TSPLIB file into a complete-graph instance with edge costs ``c``.

    Nodes are named by their TSPLIB index. TSP files give an undirected graph
    with one edge per node pair, ATSP files a directed graph with one edge per
    ordered pair.

    Raises:
        UnsupportedFormatError: Keyword or value outside the supported subset
        SchemaError: Malformed numbers or sections
    """
    lines = text.splitlines()
    spec, index = _specification(lines)
    for required in ('TYPE', 'DIMENSION', 'EDGE_WEIGHT_TYPE'):
        if required not in spec:
            raise SchemaError(f"Missing {required}")
    try:
        dimension = int(spec['DIMENSION'])
    except ValueError:
        raise SchemaError(f"DIMENSION is not an integer: {spec['DIMENSION']}")
    if dimension < 1:
        raise SchemaError("DIMENSION must be positive")
    explicit = spec['EDGE_WEIGHT_TYPE'] == 'EXPLICIT'
    if explicit and spec.get('EDGE_WEIGHT_FORMAT') != 'FULL_MATRIX':
        raise UnsupportedFormatError('EDGE_WEIGHT_FORMAT', spec.get('EDGE_WEIGHT_FORMAT', '<missing>'))

    coords: Dict[str, tuple] = {}
    weights: List = []
    section = None
    for number, raw in enumerate(lines[index:], start=index + 1):
        line = raw.strip()
        if not line:
            continue
        if line == 'EOF':
            break
        if line in SECTIONS:
            section = line
            continue
        tokens = line.split()
        if section == 'NODE_COORD_SECTION':
            if len(tokens) != 3:
                raise SchemaError("Coordinate rows read 'index x y'", number)
            coords[tokens[0]] = (parse_value(tokens[1]), parse_value(tokens[2]))
        elif section == 'EDGE_WEIGHT_SECTION':
            weights.extend(parse_value(token) for token in tokens)
        else:
            raise UnsupportedFormatError(tokens[0].rstrip(':'))

    nodes = tuple(str(i) for i in range(1, dimension + 1))
    directed = spec['TYPE'] == 'ATSP'
    if explicit:
        if len(weights) != dimension * dimension:
            raise SchemaError(f"FULL_MATRIX needs {dimension * dimension} weights, found {len(weights)}")

        def cost(i, j):
            return weights[i * dimension + j]
    else:
        missing = [node for node in nodes if node not in coords]
        if missing:
            raise SchemaError(f"No coordinates for nodes {', '.join(missing)}")

        def cost(i, j):
            return Fraction(euc_2d(coords[nodes[i]], coords[nodes[j]]))

    edges, values = [], {}
    for i in range(dimension):
        for j in range(dimension):
            if i == j or (not directed and j < i):
                continue
            if not directed and cost(i, j) != cost(j, i):
                raise SchemaError(f"TYPE TSP needs a symmetric matrix; entries {i + 1},{j + 1} differ")
            edge_id = f"e{nodes[i]}_{nodes[j]}"
            edges.append(Edge(edge_id, nodes[i], nodes[j]))
            values[edge_id] = cost(i, j)
    graph = Graph(nodes, tuple(edges), DIRECTED if directed else UNDIRECTED)
    logger.debug(f"Read TSPLIB {spec.get('NAME', '')}: {dimension} nodes, {spec['EDGE_WEIGHT_TYPE']}")
    return Instance(
        graph=graph,
        tables={'c': CostFunction('c', EDGES, values, 'ℝ≥0')},
        coords=coords,
        name=spec.get('NAME', ''),
    )
