#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Solver limits and results.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from core.costs import Value
from validator.evaluate import ObjectiveValue
from validator.solution import Solution

OPTIMAL = 'optimal'
INFEASIBLE = 'infeasible'
LIMIT_EXCEEDED = 'limit-exceeded'
# a heuristic solution that passed validation, optimality unknown
FEASIBLE = 'feasible'
STATUSES = (OPTIMAL, INFEASIBLE, LIMIT_EXCEEDED, FEASIBLE)


@dataclass(frozen=True)
class SolveLimits:
    """
    Bounds on brute-force enumeration.

    Attributes:
        max_nodes: largest instance the oracle accepts
        max_walk_edges: longest walk tried by bounded-walk enumeration;
            None means twice the number of nodes
        time_budget: wall-clock seconds, None for unlimited
        workers: parallel enumeration workers
    """
    max_nodes: int = 10
    max_walk_edges: Optional[int] = None
    time_budget: Optional[float] = None
    workers: int = 1

    def __post_init__(self):
        if self.max_nodes <= 0:
            raise ValueError(f"Configuration error: max_nodes must be positive, got {self.max_nodes}")
        if self.max_walk_edges is not None and self.max_walk_edges <= 0:
            raise ValueError(f"Configuration error: max_walk_edges must be positive, got {self.max_walk_edges}")
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError(f"Configuration error: time_budget must be positive, got {self.time_budget}")
        if self.workers <= 0:
            raise ValueError(f"Configuration error: workers must be positive, got {self.workers}")

    def walk_edges(self, node_count: int) -> int:
        if self.max_walk_edges is not None:
            return self.max_walk_edges
        return max(2 * node_count, 1)


@dataclass(frozen=True)
class SolveResult:
    status: str
    solution: Optional[Solution] = None
    value: Optional[Value] = None
    objectives: Tuple[ObjectiveValue, ...] = ()
    explored: int = 0

    @property
    def best(self) -> Optional[Tuple[Solution, Optional[Value]]]:
        if self.solution is None:
            return None
        return (self.solution, self.value)

    @property
    def is_optimal(self) -> bool:
        return self.status == OPTIMAL
