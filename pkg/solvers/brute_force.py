#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Brute-force exact oracle.

Candidate walks are enumerated by one of four strategies chosen from the
traversal attribute of the variant:

* ``permutations``: every node traversed exactly once, so candidates are
  node orders with every choice of parallel edges;
* ``subsets``: at most once (or not at all), so candidates are orders of
  every node subset;
* ``closure``: at least once with an edge-sum objective, solved as the
  exactly-once variant on the metric closure and expanded back to shortest
  paths;
* ``walks``: everything else, by depth-first enumeration of walks up to
  ``SolveLimits.walk_edges`` edges.

Every candidate is judged by ``validate``; the best feasible one wins, ties
going to the smallest node-id sequence.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from core.costs import EDGES, INF, Value
from core.graph import node_sort_key, sequence_key
from core.walk import EdgeStep, NodeVisit, Walk, walk_parts
from instances.binding import bind
from instances.closure import expand_closure_walk, metric_closure
from instances.model import Instance
from semantics.model import VISITS_ALWAYS, ResolvedVariant, TraversalSpec
from semantics.objectives import (
    AVAILABILITY, DEMAND, MAX, MaxLateness, Minimize, PriceShareSum, PurchaseDemand, TimeWindow,
    TotalCost,
)
from solvers.heuristics import tour_walk
from solvers.limits import INFEASIBLE, LIMIT_EXCEEDED, OPTIMAL, SolveLimits, SolveResult
from solvers.workers import TICK_BATCH, EnumerationWorker
from utils.log import get_logger
from validator.solution import ShareKey, Solution
from validator.validation import ValidationReport, ensure_supported, validate

logger = get_logger(__name__)

PERMUTATIONS = 'permutations'
SUBSETS = 'subsets'
CLOSURE = 'closure'
WALKS = 'walks'
STRATEGIES = (PERMUTATIONS, SUBSETS, CLOSURE, WALKS)


@dataclass(frozen=True)
class Candidate:
    key: tuple
    solution: Solution
    report: ValidationReport


def _objective_key(report: ValidationReport) -> tuple:
    return tuple(-item.value if item.sense == MAX else item.value for item in report.objectives)


def walk_order_key(walk: Walk) -> tuple:
    nodes = [item.node for item in walk.node_items]
    return (sequence_key(nodes), sequence_key(walk.edge_ids))


def _better(a: Optional[Candidate], b: Optional[Candidate]) -> Optional[Candidate]:
    if a is None:
        return b
    if b is None:
        return a
    return b if b.key < a.key else a


# -- purchases ---------------------------------------------------------------

def needs_shares(variant: ResolvedVariant) -> bool:
    for statement in variant.objectives:
        if isinstance(statement, PurchaseDemand):
            return True
        term = getattr(statement, 'term', None)
        if term is not None and any(isinstance(atom, PriceShareSum) for atom in term.atoms()):
            return True
    return False


def _price_base(variant: ResolvedVariant) -> Optional[str]:
    for statement in variant.objectives:
        term = getattr(statement, 'term', None)
        if term is None:
            continue
        for atom in term.atoms():
            if isinstance(atom, PriceShareSum):
                return atom.price.split('_', 1)[0]
    return None


def synthesize_shares(variant: ResolvedVariant, instance: Instance, walk: Walk) -> Optional[Dict[ShareKey, Fraction]]:
    """
    Buy every product from the visited nodes, cheapest first, until its demand is met.

    Returns:
        dict: positive shares keyed by (product, node), or None when the
        visited nodes cannot cover some demand
    """
    demand = next((s for s in variant.objectives if isinstance(s, PurchaseDemand) and s.kind == DEMAND), None)
    availability = next((s for s in variant.objectives
                         if isinstance(s, PurchaseDemand) and s.kind == AVAILABILITY), None)
    price = _price_base(variant)
    visited = sorted(walk_parts(walk).visited_set, key=node_sort_key)

    shares: Dict[ShareKey, Fraction] = {}
    for product in range(1, instance.product_count() + 1):
        if demand is None:
            need = Fraction(0)
        elif demand.bound.symbol is None:
            need = demand.bound.constant
        else:
            need = instance.param(f"{demand.bound.symbol}_{product}")
        prices = instance.table(f"{price}_{product}") if price else None
        avail = instance.table(f"{availability.bound.symbol}_{product}") if availability else None
        for node in sorted(visited, key=lambda v: (prices.value(v) if prices else 0, node_sort_key(v))):
            if need <= 0:
                break
            amount = need if avail is None else min(avail.value(node), need)
            if amount > 0:
                shares[(product, node)] = amount
                need -= amount
        if need > 0:
            return None
    return shares


# -- strategy ----------------------------------------------------------------

def _traversal_amounts(variant: ResolvedVariant, instance: Instance) -> set:
    spec = variant.traversal
    if spec.per_node:
        table = instance.table('d')
        return {table.value(node) for node in instance.graph.nodes}
    if spec.amount == 'd':
        return {instance.param('d')}
    return {Fraction(spec.amount)}


def edge_sum_table(variant: ResolvedVariant, instance: Instance) -> Optional[str]:
    """
    Name of the edge table when the variant only minimizes a positive
    multiple of its total, with no other statement.
    """
    if len(variant.objectives) != 1 or not isinstance(variant.objectives[0], Minimize):
        return None
    parts = variant.objectives[0].term.parts
    if len(parts) != 1:
        return None
    coefficient, atom = parts[0]
    if not isinstance(atom, TotalCost) or coefficient <= 0:
        return None
    signature = variant.cost(atom.cost)
    if signature is not None and signature.temporal is not None:
        return None
    table = instance.tables.get(atom.cost)
    if table is None or table.domain != EDGES or table.temporal is not None:
        return None
    return atom.cost


def _unconstrained_tour(variant: ResolvedVariant) -> bool:
    tour = variant.tour
    return (variant.group is None and variant.covering is None and tour.cluster is None
            and tour.precedences == 'none')


def _rotation_free(variant: ResolvedVariant) -> bool:
    """Closed tours of the variant may start anywhere without changing feasibility or value."""
    tour = variant.tour
    if not tour.circuit or tour.start or tour.end:
        return False
    if tour.cluster is not None or tour.precedences != 'none':
        return False
    if any(s.temporal is not None for s in variant.costs):
        return False
    return not any(isinstance(s, (TimeWindow, MaxLateness)) for s in variant.objectives)


def choose_strategy(variant: ResolvedVariant, instance: Instance, use_closure: bool = True) -> str:
    relation = variant.traversal.relation
    amounts = _traversal_amounts(variant, instance)
    if relation == '=' and amounts == {1}:
        return PERMUTATIONS
    if relation in ('=', '≤') and amounts <= {0, 1}:
        return SUBSETS
    if relation == '<' and amounts <= {1, 2}:
        return SUBSETS
    if relation == '≥' and amounts == {0}:
        return SUBSETS
    if (use_closure and relation == '≥' and amounts == {1} and variant.visits != VISITS_ALWAYS
            and _unconstrained_tour(variant) and edge_sum_table(variant, instance) is not None):
        return CLOSURE
    return WALKS


# -- enumeration -------------------------------------------------------------

class _Search:
    """Shared state of one brute-force run."""

    def __init__(self, variant: ResolvedVariant, instance: Instance, limits: SolveLimits):
        self.variant = variant
        self.instance = instance
        self.limits = limits
        self.graph = instance.graph
        self.nodes = instance.graph.sorted_nodes()
        self.purchase = needs_shares(variant)

    def evaluate(self, walk: Walk) -> Optional[Candidate]:
        shares = None
        if self.purchase:
            shares = synthesize_shares(self.variant, self.instance, walk)
            if shares is None:
                return None
        solution = Solution(walk, shares)
        report = validate(self.variant, self.instance, solution)
        if not report.feasible:
            return None
        return Candidate((_objective_key(report), walk_order_key(walk)), solution, report)

    # orders of nodes

    def first_nodes(self) -> List[str]:
        tour = self.variant.tour
        if tour.start and self.instance.start_node is not None:
            return [self.instance.start_node]
        return list(self.nodes)

    def closings(self) -> Tuple[bool, ...]:
        return (True,) if self.variant.tour.circuit else (False, True)

    def order_walks(self, order: Sequence[str], closed: bool) -> Iterator[Walk]:
        """Every walk through the order, one per choice of parallel edges."""
        hops = list(zip(order, order[1:]))
        if closed and len(order) > 1:
            hops.append((order[-1], order[0]))
        options = []
        for u, v in hops:
            edges = sorted(self.graph.edges_between(u, v), key=lambda edge: node_sort_key(edge.id))
            if not edges:
                return
            options.append(edges)
        for combo in itertools.product(*options):
            items = [NodeVisit(order[0])]
            for (_, v), edge in zip(hops, combo):
                items.extend((EdgeStep(edge.id), NodeVisit(v)))
            yield Walk(tuple(items), self.graph)

    def orders(self, strategy: str, prefix: Tuple[str, ...]) -> Iterator[Tuple[str, ...]]:
        first = prefix[0]
        rotation_free = _rotation_free(self.variant)
        pool = [v for v in self.nodes if v not in prefix
                and (not rotation_free or node_sort_key(v) > node_sort_key(first))]
        if strategy == PERMUTATIONS:
            if len(prefix) + len(pool) != len(self.nodes):
                return
            for rest in itertools.permutations(pool):
                yield prefix + rest
            return
        for size in range(len(pool) + 1):
            for chosen in itertools.combinations(pool, size):
                for rest in itertools.permutations(chosen):
                    yield prefix + rest

    def order_chunk(self, strategy: str, prefix: Tuple[str, ...], worker: EnumerationWorker) -> Optional[Candidate]:
        best = None
        count = 0
        end = self.instance.end_node if self.variant.tour.end else None
        for order in self.orders(strategy, prefix):
            for closed in self.closings():
                if closed and len(order) == 1 and False in self.closings():
                    continue
                if end is not None and not closed and order[-1] != end:
                    continue
                for walk in self.order_walks(order, closed):
                    best = _better(best, self.evaluate(walk))
                    count += 1
                    if count % TICK_BATCH == 0 and not worker.tick(TICK_BATCH):
                        return best
        worker.tick(count % TICK_BATCH)
        return best

    def order_prefixes(self, strategy: str) -> List[Tuple[str, ...]]:
        firsts = self.first_nodes()
        if strategy == PERMUTATIONS and _rotation_free(self.variant):
            firsts = firsts[:1]
        if strategy != PERMUTATIONS or len(self.nodes) < 2:
            return [(first,) for first in firsts]
        return [(first, second) for first in firsts for second in self.nodes if second != first]


class _WalkSearch:
    """
    Depth-first enumeration of walks up to a number of edges.

    Repeated occurrences of a node are passed through rather than visited,
    except under ``always`` visits and for the closing return to the start.
    """

    def __init__(self, search: _Search, max_edges: int):
        self.search = search
        self.max_edges = max_edges
        variant, instance = search.variant, search.instance
        self.visit_all = variant.visits == VISITS_ALWAYS
        self.circuit = variant.tour.circuit
        self.end = instance.end_node if variant.tour.end else None
        amounts = _traversal_amounts(variant, instance)
        self.cover = variant.traversal.relation in ('≥', '=') and min(amounts) >= 1
        self.adjacency: Dict[str, List[Tuple[str, str]]] = {node: [] for node in search.nodes}
        for edge in sorted(instance.graph.edges, key=lambda e: node_sort_key(e.id)):
            for node in search.nodes:
                reached = instance.graph.traverse(edge.id, node)
                if reached is not None:
                    self.adjacency[node].append((edge.id, reached))
        for node in self.adjacency:
            self.adjacency[node].sort(key=lambda step: (node_sort_key(step[1]), node_sort_key(step[0])))
        self.weights, self.scale, self.offset = self._bound_weights()

    def _bound_weights(self):
        # lower bound on the objective along a partial walk, when edge costs only add up
        name = edge_sum_table(self.search.variant, self.search.instance)
        if name is None:
            return None, None, None
        table = self.search.instance.table(name)
        if any(value < 0 for value in table.values.values()):
            return None, None, None
        statement = self.search.variant.objectives[0]
        coefficient = statement.term.parts[0][0]
        return table, coefficient, statement.term.constant

    def build(self, nodes: List[str], edges: List[str]) -> Walk:
        closing = bool(edges) and nodes[-1] == nodes[0]
        seen = set()
        items = []
        for index, node in enumerate(nodes):
            if index:
                items.append(EdgeStep(edges[index - 1]))
            visited = self.visit_all or node not in seen or (closing and index == len(nodes) - 1)
            seen.add(node)
            items.append(NodeVisit(node, visited))
        return Walk(tuple(items), self.search.graph)

    def plausible(self, nodes: List[str], edges: List[str], seen: Dict[str, int]) -> bool:
        if self.circuit and edges and nodes[-1] != nodes[0]:
            return False
        if self.end is not None and nodes[-1] != self.end:
            return False
        return not self.cover or len(seen) == len(self.search.nodes)

    def chunk(self, start: str, worker: EnumerationWorker) -> Optional[Candidate]:
        best: Optional[Candidate] = None
        nodes, edges = [start], []
        seen: Dict[str, int] = {start: 1}
        count = 0
        total = len(self.search.nodes)

        def limit() -> Value:
            if best is None or not best.key[0]:
                return INF
            return best.key[0][0]

        def extend(cost: Value) -> bool:
            nonlocal best, count
            count += 1
            if count % TICK_BATCH == 0 and not worker.tick(TICK_BATCH):
                return False
            if self.plausible(nodes, edges, seen):
                best = _better(best, self.search.evaluate(self.build(nodes, edges)))
            remaining = self.max_edges - len(edges)
            if remaining <= 0:
                return True
            if self.cover and total - len(seen) > remaining:
                return True
            for edge_id, reached in self.adjacency[nodes[-1]]:
                step = cost
                if self.weights is not None:
                    step = cost + self.weights.value(edge_id)
                    if self.scale * step + self.offset > limit():
                        continue
                nodes.append(reached)
                edges.append(edge_id)
                seen[reached] = seen.get(reached, 0) + 1
                going = extend(step)
                seen[reached] -= 1
                if not seen[reached]:
                    del seen[reached]
                nodes.pop()
                edges.pop()
                if not going:
                    return False
            return True

        extend(Fraction(0))
        worker.tick(count % TICK_BATCH)
        return best


# -- fast path for plain tours -----------------------------------------------

def _integer_pairs(instance: Instance, name: str) -> Optional[Tuple[Dict[Tuple[str, str], int], int]]:
    """Cheapest pair costs scaled to integers, or None if some cost is not finite."""
    table = instance.table(name)
    pairs: Dict[Tuple[str, str], Fraction] = {}
    graph = instance.graph
    for u in graph.nodes:
        for v in graph.nodes:
            if u == v:
                continue
            values = [table.value(edge.id) for edge in graph.edges_between(u, v)]
            if values:
                pairs[(u, v)] = min(values)
    if any(not isinstance(value, (int, Fraction)) for value in pairs.values()):
        return None
    scale = math.lcm(*(Fraction(value).denominator for value in pairs.values())) if pairs else 1
    return {pair: int(Fraction(value) * scale) for pair, value in pairs.items()}, scale


def _plain_tour(variant: ResolvedVariant, instance: Instance, strategy: str) -> Optional[str]:
    tour = variant.tour
    if strategy != PERMUTATIONS or not tour.circuit or tour.end:
        return None
    if not _unconstrained_tour(variant):
        return None
    return edge_sum_table(variant, instance)


def _pair_chunk(pairs: Dict[Tuple[str, str], int], nodes: List[str], prefix: Tuple[str, ...],
                worker: EnumerationWorker) -> Optional[Tuple[int, tuple, Tuple[str, ...]]]:
    pruning = all(value >= 0 for value in pairs.values())
    rest = [v for v in nodes if v not in prefix]
    base = 0
    for u, v in zip(prefix, prefix[1:]):
        if (u, v) not in pairs:
            return None
        base += pairs[(u, v)]
    best = None
    count = 0
    first = prefix[0]
    for perm in itertools.permutations(rest):
        count += 1
        if count % TICK_BATCH == 0 and not worker.tick(TICK_BATCH):
            break
        total, previous = base, prefix[-1]
        for node in perm + (first,):
            step = pairs.get((previous, node))
            if step is None or (pruning and best is not None and total + step > best[0]):
                total = None
                break
            total += step
            previous = node
        if total is None or (len(prefix) == 1 and not perm):
            continue
        order = prefix + perm
        if best is None or total < best[0]:
            best = (total, sequence_key(order), order)
    worker.tick(count % TICK_BATCH)
    return best


def _plain_search(search: _Search, name: str, worker: EnumerationWorker) -> Optional[Candidate]:
    instance = search.instance
    nodes = search.nodes
    if len(nodes) == 1:
        return search.evaluate(tour_walk(instance, nodes, name))
    scaled = _integer_pairs(instance, name)
    if scaled is None:
        return None
    pairs, _ = scaled
    first = search.first_nodes()[0] if search.variant.tour.start else nodes[0]
    prefixes = [(first, second) for second in nodes if second != first]
    results = worker.run(prefixes, lambda prefix, w: _pair_chunk(pairs, nodes, prefix, w))
    if not results:
        return None
    _, _, order = min(results, key=lambda found: (found[0], found[1]))
    return search.evaluate(tour_walk(instance, order, name))


# -- entry points ------------------------------------------------------------

def _result(best: Optional[Candidate], worker: EnumerationWorker) -> SolveResult:
    if worker.timed_out:
        status = LIMIT_EXCEEDED
    elif best is None:
        status = INFEASIBLE
    else:
        status = OPTIMAL
    if best is None:
        return SolveResult(status, explored=worker.explored)
    return SolveResult(status, best.solution, best.report.value(0), best.report.objectives, worker.explored)


def _merge(results: List[Optional[Candidate]]) -> Optional[Candidate]:
    best = None
    for found in results:
        best = _better(best, found)
    return best


def _closure_search(search: _Search, worker: EnumerationWorker) -> Optional[Candidate]:
    variant, instance = search.variant, search.instance
    name = edge_sum_table(variant, instance)
    closed = metric_closure(instance, name)
    exact = replace(variant, traversal=TraversalSpec('=', '1'))
    inner = _Search(exact, closed, search.limits)
    if _plain_tour(exact, closed, PERMUTATIONS):
        found = _plain_search(inner, name, worker)
    else:
        found = _merge(worker.run(inner.order_prefixes(PERMUTATIONS),
                                  lambda prefix, w: inner.order_chunk(PERMUTATIONS, prefix, w)))
    if found is None:
        return None
    return search.evaluate(expand_closure_walk(closed, instance, found.solution.walk))


def brute_force(variant: ResolvedVariant, instance: Instance, limits: Optional[SolveLimits] = None,
                use_closure: bool = True, progress: Optional[Callable[[int, int], None]] = None) -> SolveResult:
    """
    Find an optimal solution by exhaustive enumeration.

    Args:
        variant: resolved single-traveler variant
        instance: instance bound to the variant
        limits: enumeration limits, defaults when None
        use_closure: solve at-least-once variants on the metric closure
            when the objective is an edge-cost sum; direct walk enumeration
            otherwise
        progress: optional callback receiving (finished chunks, total chunks)

    Returns:
        SolveResult: ``optimal`` with the best solution, ``infeasible`` when
        no candidate passes validation, ``limit-exceeded`` when the instance
        is too large or the time budget ran out

    Raises:
        UnsupportedError: Templates, several travelers or kinetic costs
        BindingError: Instance lacks data the variant needs
    """
    limits = limits or SolveLimits()
    ensure_supported(variant)
    bind(instance, variant)
    size = len(instance.graph.nodes)
    worker = EnumerationWorker(limits, progress)
    if size > limits.max_nodes:
        logger.info(f"Instance has {size} nodes, more than the limit of {limits.max_nodes}")
        return SolveResult(LIMIT_EXCEEDED)
    if size == 0:
        return SolveResult(INFEASIBLE)

    strategy = choose_strategy(variant, instance, use_closure)
    search = _Search(variant, instance, limits)
    logger.info(f"Brute force on {instance.name or '<unnamed>'} ({size} nodes) by {strategy}")

    if strategy == CLOSURE:
        best = _closure_search(search, worker)
    elif strategy == WALKS:
        walks = _WalkSearch(search, limits.walk_edges(size))
        best = _merge(worker.run(search.first_nodes(), walks.chunk))
    elif _plain_tour(variant, instance, strategy):
        best = _plain_search(search, _plain_tour(variant, instance, strategy), worker)
    else:
        best = _merge(worker.run(search.order_prefixes(strategy),
                                 lambda prefix, w: search.order_chunk(strategy, prefix, w)))

    result = _result(best, worker)
    logger.info(f"Brute force finished: {result.status}, value {result.value}, {result.explored} candidates")
    return result
