#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from .brute_force import (
    CLOSURE, PERMUTATIONS, SUBSETS, WALKS, brute_force, choose_strategy, synthesize_shares,
)
from .heuristics import christofides, double_tree, nearest_neighbor, tour_walk
from .limits import (
    FEASIBLE, INFEASIBLE, LIMIT_EXCEEDED, OPTIMAL, SolveLimits, SolveResult,
)
from .matching import min_weight_perfect_matching
from .ratio import INCONCLUSIVE, RatioCheck, ratio_check
from .workers import EnumerationWorker

__all__ = [
    'CLOSURE', 'PERMUTATIONS', 'SUBSETS', 'WALKS', 'brute_force', 'choose_strategy', 'synthesize_shares',
    'christofides', 'double_tree', 'nearest_neighbor', 'tour_walk',
    'FEASIBLE', 'INFEASIBLE', 'LIMIT_EXCEEDED', 'OPTIMAL', 'SolveLimits', 'SolveResult',
    'min_weight_perfect_matching',
    'INCONCLUSIVE', 'RatioCheck', 'ratio_check',
    'EnumerationWorker',
]
