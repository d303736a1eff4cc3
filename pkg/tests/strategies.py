#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Hypothesis strategies for instances and walks. Instances come from the
seeded generators, so a failing example shrinks to a seed and a size.
"""

from hypothesis import strategies as st

from core.walk import EdgeStep, NodeVisit, Walk
from instances.generators import random_connected, random_metric, with_node_costs

seeds = st.integers(min_value=0, max_value=2 ** 32 - 1)


@st.composite
def connected_instances(draw, min_nodes=2, max_nodes=6, node_costs=False, parallel=0.0):
    seed = draw(seeds)
    n = draw(st.integers(min_value=min_nodes, max_value=max_nodes))
    instance = random_connected(seed, n, parallel=parallel)
    if node_costs:
        instance = with_node_costs(instance, seed)
    return instance


@st.composite
def metric_instances(draw, min_nodes=3, max_nodes=6):
    return random_metric(draw(seeds), draw(st.integers(min_value=min_nodes, max_value=max_nodes)))


@st.composite
def walks_in(draw, instance, max_edges=6, min_edges=0):
    """Proper walks with every node visited."""
    graph = instance.graph
    current = draw(st.sampled_from(list(graph.nodes)))
    items = [NodeVisit(current)]
    for _ in range(draw(st.integers(min_value=min_edges, max_value=max_edges))):
        usable = [edge.id for edge in graph.edges if graph.traverse(edge.id, current) is not None]
        if not usable:
            break
        edge_id = draw(st.sampled_from(usable))
        current = graph.traverse(edge_id, current)
        items += [EdgeStep(edge_id), NodeVisit(current)]
    return Walk(tuple(items), graph)
