#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from .solution import Solution, format_solution, parse_solution_text
from .schedule import Schedule, arrival_schedule, simulate, timeline
from .evaluate import EvaluationContext, ObjectiveValue, evaluate_objective
from .checks import Check
from .validation import ValidationReport, ensure_supported, validate

__all__ = [
    'Solution', 'format_solution', 'parse_solution_text',
    'Schedule', 'arrival_schedule', 'simulate', 'timeline',
    'EvaluationContext', 'ObjectiveValue', 'evaluate_objective',
    'Check',
    'ValidationReport', 'ensure_supported', 'validate',
]
