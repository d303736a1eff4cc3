#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Evaluation of objective terms on a solution.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from core.costs import EDGES, Value, complement_cost, lift_cost
from core.errors import BindingError, UnsupportedError
from core.walk import walk_parts
from instances.model import Instance
from semantics.model import ResolvedVariant
from semantics.objectives import (
    OPTIMIZATION_TYPES, CardinalityVisited, ComplementCost, LinearTerm, MaxLateness, MaxMinEdge,
    Maximize, MinMaxEdge, Minimize, PriceShareSum, TotalCost,
)
from validator.schedule import Schedule, simulate, time_window_of
from validator.solution import Solution


@dataclass(frozen=True)
class ObjectiveValue:
    label: str
    sense: str
    value: Value

    def __str__(self):
        return f"{self.sense} {self.label} = {self.value}"


class EvaluationContext:
    """
    Everything a term needs: the variant, the instance, the solution and,
    computed on first use, the arrival schedule.
    """

    def __init__(self, variant: ResolvedVariant, instance: Instance, solution: Solution):
        self.variant = variant
        self.instance = instance
        self.solution = solution
        self.walk = solution.walk.bind(instance.graph)
        self.parts = walk_parts(self.walk)
        self._schedule: Optional[Schedule] = None

    @property
    def schedule(self) -> Schedule:
        if self._schedule is None:
            window = time_window_of(self.variant)
            if window is not None:
                self._schedule = simulate(self.instance, self.walk, window.travel, window.handling,
                                          window.release, window.waiting is not None)
            else:
                temporal = [s.name for s in self.variant.costs
                            if s.domain == EDGES and s.temporal is not None and not s.is_waiting]
                self._schedule = simulate(self.instance, self.walk, tuple(temporal))
        return self._schedule

    def product_count(self) -> int:
        return self.instance.product_count()

    def total_cost(self, name: str) -> Value:
        signature = self.variant.cost(name)
        if signature is not None and signature.temporal is not None:
            tag = signature.temporal.tag
            if tag == 'kinetic':
                raise UnsupportedError("Kinetic costs are parsed but not evaluated")
            if tag == 'waiting':
                return self.schedule.total_wait
        table = self.instance.table(name)
        if table.temporal is not None:
            return simulate(self.instance, self.walk, (name,)).travel
        return lift_cost(table, self.walk)

    def price_share(self, atom: PriceShareSum) -> Value:
        if self.solution.shares is None:
            raise BindingError("Variant prices purchases but the solution has no shares")
        total: Value = Fraction(0)
        for product in range(1, self.product_count() + 1):
            price = self.instance.table(f"{atom.price.split('_', 1)[0]}_{product}")
            for node in self.parts.visited_set:
                total += price.value(node) * self.solution.share(product, node)
        return total

    def atom(self, atom) -> Value:
        if isinstance(atom, TotalCost):
            return self.total_cost(atom.cost)
        if isinstance(atom, ComplementCost):
            return complement_cost(self.instance.table(atom.cost), self.walk)
        if isinstance(atom, CardinalityVisited):
            return Fraction(len(self.parts.visited_set))
        if isinstance(atom, PriceShareSum):
            return self.price_share(atom)
        raise UnsupportedError(f"Cannot evaluate {atom}")

    def term(self, term: LinearTerm) -> Value:
        total: Value = term.constant
        for coefficient, atom in term.parts:
            total += coefficient * self.atom(atom)
        return total

    def edge_values(self, name: str) -> List[Value]:
        table = self.instance.table(name)
        return [table.value(edge_id) for edge_id in self.parts.edge_sequence]

    def max_lateness(self, statement: MaxLateness) -> Value:
        schedule = simulate(self.instance, self.walk, statement.travel, statement.handling)
        deadline = self.instance.table(statement.deadline)
        lateness: Value = Fraction(0)
        for node, arrival in zip(schedule.nodes, schedule.arrivals):
            lateness = max(lateness, arrival - deadline.value(node))
        return lateness


def evaluate_statement(context: EvaluationContext, statement) -> Value:
    if isinstance(statement, (Minimize, Maximize)):
        return context.term(statement.term)
    if isinstance(statement, MinMaxEdge):
        values = context.edge_values(statement.cost)
        return max(values) if values else Fraction(0)
    if isinstance(statement, MaxMinEdge):
        values = context.edge_values(statement.cost)
        return min(values) if values else Fraction(0)
    if isinstance(statement, MaxLateness):
        return context.max_lateness(statement)
    raise UnsupportedError(f"{type(statement).__name__} is not an optimization statement")


def evaluate_objective(variant: ResolvedVariant, instance: Instance, solution: Solution) -> List[ObjectiveValue]:
    """
    Exact value of every optimization statement of the variant, in order.

    Raises:
        BindingError: Missing table, parameter or shares
        UnsupportedError: Kinetic costs or template variants
    """
    if variant.is_template:
        raise UnsupportedError("Template definitions have no objective to evaluate")
    context = EvaluationContext(variant, instance, solution)
    return [ObjectiveValue(statement.label(), statement.sense, evaluate_statement(context, statement))
            for statement in variant.objectives if isinstance(statement, OPTIMIZATION_TYPES)]
