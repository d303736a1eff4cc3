#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Command implementations. Each returns the process exit status; domain
errors propagate to ``cli.app.run`` which maps them to exit codes.
"""

from __future__ import annotations

import dataclasses
import sys
from pathlib import Path

from catalog.manager import CatalogManager
from config.settings import SettingsManager
from core.diagnostics import ERROR
from grammar.ast_nodes import LONGHAND, SHORTHAND
from grammar.lint import lint
from grammar.parser import AUTO, parse
from grammar.render import render
from instances.binding import bind
from instances.model import Instance
from instances.native_format import load_native
from instances.tsplib import load_tsplib
from semantics.explain import explain
from semantics.model import ResolvedVariant
from semantics.resolver import resolve
from semantics.wellformed import check_wellformed
from solvers.brute_force import brute_force
from solvers.heuristics import christofides, double_tree, nearest_neighbor
from solvers.limits import FEASIBLE, INFEASIBLE, OPTIMAL, SolveLimits, SolveResult
from utils.log import get_logger
from validator.solution import parse_solution_text
from validator.validation import ensure_supported, validate

from cli import output

logger = get_logger(__name__)

NOTATIONS = {'auto': AUTO, 'long': LONGHAND, 'short': SHORTHAND}
TSPLIB_SUFFIXES = ('.tsp', '.atsp')

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


def read_text(path) -> str:
    """
    Raises:
        OSError: If the file cannot be read
    """
    return Path(path).read_text(encoding='utf-8')


def emit(args, payload, human: str):
    print(output.dumps(payload) if args.json else human)


def report_diagnostics(diagnostics):
    for diagnostic in diagnostics:
        print(str(diagnostic), file=sys.stderr)


def load_variant(path) -> ResolvedVariant:
    return resolve(parse(read_text(path)))


def load_instance(path) -> Instance:
    """Native ``.t3i`` files by default, TSPLIB for ``.tsp``/``.atsp``."""
    text = read_text(path)
    if Path(path).suffix.lower() in TSPLIB_SUFFIXES:
        instance = load_tsplib(text)
    else:
        instance = load_native(text)
    logger.info(f"Loaded instance {instance.name or path} with {len(instance.graph.nodes)} nodes")
    return instance


def cmd_parse(args, settings: SettingsManager) -> int:
    ast = parse(read_text(args.file), NOTATIONS[args.notation])
    if args.emit == 'ast':
        print(output.dumps(output.ast_data(ast)))
        return EXIT_OK
    target = LONGHAND if args.emit == 'long' else SHORTHAND
    text = render(ast, target)
    emit(args, {'notation': target, 'text': text}, text)
    return EXIT_OK


def cmd_explain(args, settings: SettingsManager) -> int:
    ast = parse(read_text(args.file))
    variant = resolve(ast)
    diagnostics = lint(ast) + check_wellformed(variant)
    report_diagnostics(diagnostics)
    text = explain(variant)
    emit(args, {
        'explain': text,
        'diagnostics': [str(diagnostic) for diagnostic in diagnostics],
    }, text)
    return EXIT_NEGATIVE if any(d.severity == ERROR for d in diagnostics) else EXIT_OK


def cmd_validate(args, settings: SettingsManager) -> int:
    variant = load_variant(args.variant)
    instance = load_instance(args.instance)
    ensure_supported(variant)
    bind(instance, variant)
    solution = parse_solution_text(read_text(args.solution), instance.graph)
    report = validate(variant, instance, solution)
    emit(args, output.report_data(report), output.format_report(report))
    return EXIT_OK if report.feasible else EXIT_NEGATIVE


def solve_limits(args, settings: SettingsManager) -> SolveLimits:
    """Configured limits with the command-line flags on top."""
    limits = settings.solve_limits()
    overrides = {
        key: getattr(args, key)
        for key in ('max_nodes', 'max_walk_edges', 'time_budget', 'workers')
        if getattr(args, key) is not None
    }
    return dataclasses.replace(limits, **overrides)


def run_heuristic(args, variant: ResolvedVariant, instance: Instance) -> SolveResult:
    ensure_supported(variant)
    bind(instance, variant)
    if args.method == 'nn':
        solution = nearest_neighbor(instance, start=args.start)
    elif args.method == 'double-tree':
        solution = double_tree(instance)
    else:
        solution = christofides(instance)
    report = validate(variant, instance, solution)
    for check in report.failures():
        logger.warning(f"Heuristic tour fails {check}")
    status = FEASIBLE if report.feasible else INFEASIBLE
    return SolveResult(status, solution, report.value(0), report.objectives)


def cmd_solve(args, settings: SettingsManager) -> int:
    variant = load_variant(args.variant)
    instance = load_instance(args.instance)
    if args.method == 'brute':
        result = brute_force(variant, instance, solve_limits(args, settings))
    else:
        result = run_heuristic(args, variant, instance)
    emit(args, output.result_data(result), output.format_result(result))
    return EXIT_OK if result.status in (OPTIMAL, FEASIBLE) else EXIT_NEGATIVE


def cmd_catalog(args, settings: SettingsManager) -> int:
    manager = CatalogManager(settings.corpus_dir)
    if args.action == 'list':
        entries = manager.list(args.family)
        emit(args, [output.entry_summary(entry) for entry in entries], output.format_entry_list(entries))
        return EXIT_OK
    if args.action == 'show':
        entry = manager.get(args.id)
        emit(args, output.entry_data(entry), output.format_entry(entry))
        return EXIT_OK

    diagnostics = manager.verify_corpus()
    report_diagnostics(diagnostics)
    count = len(manager.list())
    emit(args, {
        'entries': count,
        'diagnostics': [str(diagnostic) for diagnostic in diagnostics],
    }, f"{count} entries, {len(diagnostics)} problem(s)")
    return EXIT_OK if not diagnostics else EXIT_NEGATIVE
