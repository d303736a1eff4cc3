#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from .graph import Edge, Graph, node_sort_key, sequence_key, UNDIRECTED, DIRECTED, BIDIRECTED
from .walk import (
    EdgeStep, NodeVisit, Walk, WalkParts,
    counted_traversals, counted_visits, format_walk, is_closed, is_valid_walk,
    originating_proper_walk, parse_walk_text, traversals_count, visits_count, walk_parts,
)
from .diagnostics import Diagnostic, ERROR, WARNING, NOTE
from .costs import (
    CostFunction, TemporalTable, EDGES, NODES, EDGE_PAIRS, INF,
    complement_cost, format_value, lift_cost, normalize_range_tag, parse_value, range_contains,
)

__all__ = [
    'Edge', 'Graph', 'node_sort_key', 'sequence_key', 'UNDIRECTED', 'DIRECTED', 'BIDIRECTED',
    'EdgeStep', 'NodeVisit', 'Walk', 'WalkParts',
    'counted_traversals', 'counted_visits', 'format_walk', 'is_closed', 'is_valid_walk',
    'originating_proper_walk', 'parse_walk_text', 'traversals_count', 'visits_count', 'walk_parts',
    'Diagnostic', 'ERROR', 'WARNING', 'NOTE',
    'CostFunction', 'TemporalTable', 'EDGES', 'NODES', 'EDGE_PAIRS', 'INF',
    'complement_cost', 'format_value', 'lift_cost', 'normalize_range_tag', 'parse_value', 'range_contains',
]
