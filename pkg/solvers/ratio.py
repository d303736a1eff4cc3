#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Approximation ratio checks against the brute-force oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from core.costs import Value
from instances.model import Instance
from semantics.model import ResolvedVariant
from semantics.objectives import MIN
from solvers.brute_force import brute_force
from solvers.limits import OPTIMAL, SolveLimits, SolveResult
from utils.log import get_logger
from validator.solution import Solution
from validator.validation import validate

logger = get_logger(__name__)

HOLDS = 'holds'
VIOLATED = 'violated'
INCONCLUSIVE = 'inconclusive'


@dataclass(frozen=True)
class RatioCheck:
    status: str
    approx: Optional[Value] = None
    optimum: Optional[Value] = None
    bound: Optional[Fraction] = None
    detail: str = ''

    @property
    def holds(self) -> bool:
        return self.status == HOLDS

    def __bool__(self):
        return self.holds


def ratio_check(variant: ResolvedVariant, instance: Instance, approx: Solution, bound,
                limits: Optional[SolveLimits] = None, oracle: Optional[SolveResult] = None) -> RatioCheck:
    """
    Compare an approximate solution with the oracle optimum.

    For minimization the check holds iff approx <= bound * optimum, for
    maximization iff approx >= optimum / bound. An infeasible approximate
    solution violates any bound.

    Args:
        variant: resolved variant with an optimization statement
        instance: instance bound to the variant
        approx: the solution to judge
        bound: ratio as a rational (or anything Fraction accepts)
        limits: oracle limits
        oracle: a brute-force result computed earlier for the same input

    Returns:
        RatioCheck: ``inconclusive`` when the oracle did not finish
    """
    bound = Fraction(bound)
    report = validate(variant, instance, approx)
    if not report.feasible or not report.objectives:
        detail = 'approximate solution is infeasible' if not report.feasible else 'variant has no objective'
        return RatioCheck(VIOLATED, bound=bound, detail=detail)
    approx_value = report.value(0)

    if oracle is None:
        oracle = brute_force(variant, instance, limits)
    if oracle.status != OPTIMAL:
        logger.info(f"Ratio check inconclusive: oracle status {oracle.status}")
        return RatioCheck(INCONCLUSIVE, approx_value, oracle.value, bound, f"oracle {oracle.status}")

    optimum = oracle.value
    if report.objectives[0].sense == MIN:
        holds = approx_value <= bound * optimum
    else:
        holds = approx_value * bound >= optimum
    status = HOLDS if holds else VIOLATED
    if not holds:
        logger.warning(f"Ratio {bound} violated: approximate {approx_value}, optimum {optimum}")
    return RatioCheck(status, approx_value, optimum, bound)
