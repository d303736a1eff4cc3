#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Seeded instance generators for tests and desk-scale experiments.

Every generator takes a seed (or a ``random.Random``) so the same call always
returns the same instance.
"""

from __future__ import annotations

import random
from dataclasses import replace
from fractions import Fraction
from typing import List, Sequence, Union

from core.costs import EDGES, INF, NODES, CostFunction
from core.graph import DIRECTED, UNDIRECTED, Edge, Graph
from instances.closure import metric_closure
from instances.model import Instance

Seed = Union[int, random.Random]


def _rng(seed: Seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def node_names(n: int) -> List[str]:
    return [f"v{i}" for i in range(1, n + 1)]


def complete_instance(costs, n: int, directed: bool = False, name: str = '') -> Instance:
    """
    Complete graph on v1..vn with ``costs(u, v)`` on the edge from u to v.

    Edge ids are ``e{i}_{j}``; undirected graphs get one edge per pair.
    """
    nodes = node_names(n)
    edges, values = [], {}
    for i, u in enumerate(nodes):
        for j, v in enumerate(nodes):
            if i == j or (not directed and j < i):
                continue
            edge_id = f"e{i + 1}_{j + 1}"
            edges.append(Edge(edge_id, u, v))
            values[edge_id] = Fraction(costs(u, v))
    graph = Graph(tuple(nodes), tuple(edges), DIRECTED if directed else UNDIRECTED)
    return Instance(graph, {'c': CostFunction('c', EDGES, values, 'ℝ≥0')}, name=name)


def unit_complete(n: int) -> Instance:
    return complete_instance(lambda u, v: 1, n, name=f"unit-K{n}")


def random_complete(seed: Seed, n: int, low: int = 1, high: int = 10, directed: bool = False) -> Instance:
    """Uniform integer costs in [low, high]; usually not metric."""
    rng = _rng(seed)
    return complete_instance(lambda u, v: rng.randint(low, high), n, directed, name=f"random-complete-{n}")


def random_connected(seed: Seed, n: int, extra: float = 0.3, low: int = 0, high: int = 10,
                     parallel: float = 0.0) -> Instance:
    """
    Random connected undirected multigraph.

    A random spanning tree is extended by every other pair with probability
    ``extra``; each edge gets a parallel copy with probability ``parallel``.
    """
    rng = _rng(seed)
    nodes = node_names(n)
    order = nodes[:]
    rng.shuffle(order)
    pairs = [(order[i], order[rng.randrange(i)]) for i in range(1, n)]
    tree = {frozenset(pair) for pair in pairs}
    for i, u in enumerate(nodes):
        for v in nodes[i + 1:]:
            if frozenset((u, v)) not in tree and rng.random() < extra:
                pairs.append((u, v))
    edges, values = [], {}
    for u, v in pairs:
        copies = 2 if rng.random() < parallel else 1
        for _ in range(copies):
            edge_id = f"e{len(edges) + 1}"
            edges.append(Edge(edge_id, u, v))
            values[edge_id] = Fraction(rng.randint(low, high))
    graph = Graph(tuple(nodes), tuple(edges), UNDIRECTED)
    return Instance(graph, {'c': CostFunction('c', EDGES, values, 'ℝ≥0')}, name=f"random-connected-{n}")


def random_metric(seed: Seed, n: int) -> Instance:
    """Metric closure of a random connected graph with positive costs."""
    rng = _rng(seed)
    closed = metric_closure(random_connected(rng, n, extra=0.4, low=1, high=10))
    return replace(closed, closure_paths={}, name=f"random-metric-{n}")


def one_two_metric(seed: Seed, n: int) -> Instance:
    """Complete graph with costs 1 or 2, which is always metric."""
    rng = _rng(seed)
    return complete_instance(lambda u, v: rng.choice((1, 2)), n, name=f"one-two-{n}")


def collinear(positions: Sequence) -> Instance:
    """Points on a line with euclidean costs; nodes are ordered left to right."""
    points = sorted(Fraction(p) for p in positions)
    coords = {f"v{i}": (x, Fraction(0)) for i, x in enumerate(points, start=1)}
    instance = complete_instance(lambda u, v: abs(coords[u][0] - coords[v][0]), len(points), name='collinear')
    return replace(instance, coords=coords)


def with_time_windows(instance: Instance, seed: Seed, horizon: int = 20, tight: float = 0.5) -> Instance:
    """
    Add integer release dates ``r`` and deadlines ``d``.

    A node gets the open window [0, ∞) with probability ``1 - tight``.
    """
    rng = _rng(seed)
    release, deadline = {}, {}
    for node in instance.graph.nodes:
        if rng.random() < tight:
            opens = rng.randint(0, horizon)
            release[node] = Fraction(opens)
            deadline[node] = Fraction(rng.randint(opens, opens + horizon))
        else:
            release[node] = Fraction(0)
            deadline[node] = INF
    return instance.with_tables(
        r=CostFunction('r', NODES, release, 'ℝ≥0'),
        d=CostFunction('d', NODES, deadline, 'ℝ≥0∪{∞}'),
    )


def with_purchase_tables(instance: Instance, seed: Seed, products: int = 2, max_price: int = 9,
                         max_avail: int = 3) -> Instance:
    """
    Add prices, availabilities and demands for a purchasing variant.

    Each product gets tables ``price_i`` and ``avail_i`` and a demand
    parameter ``d_i`` that the nodes can satisfy together.
    """
    rng = _rng(seed)
    tables, params = dict(instance.tables), dict(instance.params)
    for index in range(1, products + 1):
        price = {node: Fraction(rng.randint(1, max_price)) for node in instance.graph.nodes}
        avail = {node: Fraction(rng.randint(0, max_avail)) for node in instance.graph.nodes}
        total = sum(avail.values())
        if total == 0:
            first = instance.graph.nodes[0]
            avail[first] = Fraction(1)
            total = Fraction(1)
        tables[f"price_{index}"] = CostFunction(f"price_{index}", NODES, price, 'ℝ≥0')
        tables[f"avail_{index}"] = CostFunction(f"avail_{index}", NODES, avail, 'ℝ≥0∪{∞}')
        params[f"d_{index}"] = Fraction(rng.randint(1, int(total)))
    params['m'] = Fraction(products)
    return replace(instance, tables=tables, params=params)


def with_node_costs(instance: Instance, seed: Seed, name: str = 'p', low: int = 0, high: int = 10) -> Instance:
    rng = _rng(seed)
    values = {node: Fraction(rng.randint(low, high)) for node in instance.graph.nodes}
    return instance.with_tables(**{name: CostFunction(name, NODES, values, 'ℝ≥0')})
