#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Machine and human renderings of command results.

JSON output is stable: keys are sorted and every exact value is written as
a string, ``"p/q"`` for non-integers and ``"inf"`` for unbounded values.
"""

from __future__ import annotations

import dataclasses
import json
from typing import Any, Dict, List, Optional

from catalog.manager import CatalogEntry
from core.costs import format_value
from core.walk import format_walk
from solvers.limits import SolveResult
from validator.validation import ValidationReport


def dumps(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False)


def _value(value) -> Optional[str]:
    return None if value is None else format_value(value)


def ast_data(node) -> Any:
    """Nested plain data for a parse tree; spans are left out."""
    if dataclasses.is_dataclass(node):
        data = {'node': type(node).__name__}
        for item in dataclasses.fields(node):
            if item.name == 'span':
                continue
            data[item.name] = ast_data(getattr(node, item.name))
        return data
    if isinstance(node, (tuple, list)):
        return [ast_data(item) for item in node]
    return node


def report_data(report: ValidationReport) -> Dict[str, Any]:
    return {
        'feasible': report.feasible,
        'checks': [
            {'id': check.id, 'passed': check.passed, 'witness': check.witness}
            for check in report.checks
        ],
        'objectives': [
            {'label': item.label, 'sense': item.sense, 'value': _value(item.value)}
            for item in report.objectives
        ],
        'arrival_times': None if report.arrival_times is None
        else [_value(time) for time in report.arrival_times],
        'extensions_unchecked': report.extensions_unchecked,
    }


def shares_data(shares) -> Optional[List[Dict[str, Any]]]:
    if shares is None:
        return None
    return [
        {'product': product, 'node': node, 'amount': _value(amount)}
        for (product, node), amount in sorted(shares.items())
    ]


def result_data(result: SolveResult) -> Dict[str, Any]:
    solution = result.solution
    return {
        'status': result.status,
        'value': _value(result.value),
        'walk': None if solution is None else format_walk(solution.walk),
        'shares': None if solution is None else shares_data(solution.shares),
        'explored': result.explored,
    }


def bound_data(bound) -> Dict[str, Any]:
    return {
        'kind': bound.kind,
        'expression': bound.expression,
        'citation': bound.citation,
        'confirmed': bound.confirmed,
    }


def entry_summary(entry: CatalogEntry) -> Dict[str, Any]:
    return {'id': entry.id, 'family': entry.family, 'notation': entry.notation}


def entry_data(entry: CatalogEntry) -> Dict[str, Any]:
    return {
        'id': entry.id,
        'family': entry.family,
        'file': entry.file,
        'notation': entry.notation,
        'definition': entry.definition_text,
        'extensions': list(entry.extensions),
        'bounds': [bound_data(bound) for bound in entry.bounds],
        'pair': entry.pair,
        'same_as': entry.same_as,
        'merged': list(entry.merged),
        'note': entry.note,
    }


def format_report(report: ValidationReport) -> str:
    lines = [f"feasible: {'yes' if report.feasible else 'no'}"]
    lines.extend(f"  {check}" for check in report.checks)
    for item in report.objectives:
        lines.append(f"{item.sense} {item.label} = {format_value(item.value)}")
    if report.arrival_times is not None:
        lines.append("arrival times: " + ' '.join(format_value(time) for time in report.arrival_times))
    if report.extensions_unchecked:
        lines.append("note: extension conditions were not checked")
    return '\n'.join(lines)


def format_result(result: SolveResult) -> str:
    data = result_data(result)
    lines = [
        f"{'status':<10}{data['status']}",
        f"{'value':<10}{data['value'] if data['value'] is not None else '-'}",
        f"{'walk':<10}{data['walk'] or '-'}",
    ]
    for share in data['shares'] or []:
        lines.append(f"{'share':<10}{share['product']} {share['node']} {share['amount']}")
    lines.append(f"{'explored':<10}{data['explored']}")
    return '\n'.join(lines)


def format_entry_list(entries: List[CatalogEntry]) -> str:
    if not entries:
        return ''
    width = max(len(entry.id) for entry in entries) + 2
    family_width = max(len(entry.family) for entry in entries) + 2
    return '\n'.join(f"{entry.id:<{width}}{entry.family:<{family_width}}{entry.notation}" for entry in entries)


def format_entry(entry: CatalogEntry) -> str:
    lines = [f"id: {entry.id}", f"family: {entry.family}", "", entry.definition_text.rstrip(), ""]
    for bound in entry.bounds:
        lines.append(f"{bound.kind} bound: {bound.expression}"
                     + (f" [{bound.citation}]" if bound.citation else '')
                     + ('' if bound.confirmed is None else f" ({'confirmed' if bound.confirmed else 'unconfirmed'})"))
    if entry.pair:
        lines.append(f"pair: {entry.pair}")
    if entry.same_as:
        lines.append(f"same as: {entry.same_as}")
    if entry.merged:
        lines.append(f"merged: {', '.join(entry.merged)}")
    if entry.note:
        lines.append(f"note: {entry.note}")
    return '\n'.join(lines).rstrip()
