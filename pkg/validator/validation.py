#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Solution validation against a resolved variant and an instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from core.costs import Value
from core.errors import AmbiguityError, UnsupportedError, WalkReferenceError
from core.walk import format_walk, is_valid_walk, originating_proper_walk
from instances.model import Instance
from semantics.model import ResolvedVariant
from semantics.objectives import TimeWindow
from utils.log import get_logger
from validator.checks import (
    Check, check_cluster, check_constraints, check_covering, check_graph, check_group,
    check_precedences, check_shares, check_tour, check_traversals, check_visits,
)
from validator.evaluate import EvaluationContext, ObjectiveValue, evaluate_objective
from validator.solution import Solution

logger = get_logger(__name__)


@dataclass(frozen=True)
class ValidationReport:
    feasible: bool
    checks: Tuple[Check, ...] = ()
    objectives: Tuple[ObjectiveValue, ...] = ()
    arrival_times: Optional[Tuple[Value, ...]] = None
    extensions_unchecked: bool = False

    def failures(self) -> Tuple[Check, ...]:
        return tuple(check for check in self.checks if not check.passed)

    def value(self, index: int = 0) -> Optional[Value]:
        return self.objectives[index].value if len(self.objectives) > index else None


def ensure_supported(variant: ResolvedVariant):
    """
    Reject variants whose semantics cannot be executed.

    Raises:
        UnsupportedError: Templates, several travelers, kinetic costs, or
            arbitrary precedences that no extension describes
    """
    if variant.is_template:
        names = ', '.join(f"{item.field}.{item.name}" for item in variant.open_attributes)
        raise UnsupportedError(f"Template definition with open attributes {names}")
    if not variant.count.is_single():
        raise UnsupportedError(f"Only single-traveler variants are supported, count is {variant.count}")
    if any(s.temporal is not None and s.temporal.tag == 'kinetic' for s in variant.costs):
        raise UnsupportedError("Kinetic costs are parsed but not evaluated")
    if variant.tour.precedences == 'arbitrary' and not variant.has_extension:
        raise UnsupportedError("Arbitrary precedences need an extension describing them")


def _walk_check(instance: Instance, solution: Solution) -> Check:
    walk = solution.walk.bind(instance.graph)
    try:
        valid = is_valid_walk(instance.graph, walk)
    except WalkReferenceError as e:
        return Check('walk', False, e.ident, str(e))
    if not valid:
        return Check('walk', False, format_walk(walk), "not a walk in the instance graph")
    try:
        originating_proper_walk(instance.graph, walk)
    except AmbiguityError as e:
        return Check('walk', False, format_walk(walk), str(e))
    return Check('walk', True)


def validate(variant: ResolvedVariant, instance: Instance, solution: Solution) -> ValidationReport:
    """
    Check a candidate solution and evaluate its objectives.

    Checks run in a fixed order: walk, traversals, visits, group, covering,
    start/end/circuit, graph structure, precedences, clusters, shares, then
    bound, time window and purchase statements.

    Args:
        variant: resolved variant
        instance: instance bound to the variant
        solution: walk and optional purchase shares

    Returns:
        ValidationReport: feasible iff every check passed

    Raises:
        UnsupportedError: See ``ensure_supported``
        BindingError: Missing instance data or shares the variant needs
    """
    ensure_supported(variant)
    walk_check = _walk_check(instance, solution)
    if not walk_check.passed:
        return ValidationReport(False, (walk_check,), extensions_unchecked=variant.has_extension)

    context = EvaluationContext(variant, instance, solution)
    checks = [walk_check]
    for run in (check_traversals, check_visits, check_group, check_covering, check_tour,
                check_graph, check_precedences, check_cluster, check_shares, check_constraints):
        checks.extend(run(context))

    arrival_times = None
    if any(isinstance(statement, TimeWindow) for statement in variant.objectives):
        arrival_times = context.schedule.arrivals
    objectives = tuple(evaluate_objective(variant, instance, solution))
    feasible = all(check.passed for check in checks)
    if variant.has_extension:
        logger.info(f"Extension {variant.extension_tag} is not checked")
    logger.debug(f"Validated {format_walk(context.walk)}: {'feasible' if feasible else 'infeasible'}")
    return ValidationReport(feasible, tuple(checks), objectives, arrival_times, variant.has_extension)
