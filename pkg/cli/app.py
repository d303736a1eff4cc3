#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Command-line entry point.

Exit statuses: 0 on success or a feasible result, 1 for a negative domain
answer (syntax error, infeasible solution, unknown catalog id), 2 for usage,
input and configuration errors. Diagnostics go to stderr and machine output
to stdout.
"""

from __future__ import annotations

import argparse
import sys
import traceback
from typing import Optional, Sequence

from config.settings import SettingsManager
from core.errors import (
    AmbiguityError, BindingError, ClosureError, InstanceInvariantError, PreconditionError,
    SchemaError, T3coError, UnsupportedError, UnsupportedFormatError, WalkReferenceError,
)
from utils.log import LEVELS, configure_logging, get_logger

from cli.commands import (
    EXIT_NEGATIVE, EXIT_USAGE, NOTATIONS,
    cmd_catalog, cmd_explain, cmd_parse, cmd_solve, cmd_validate,
)

logger = get_logger(__name__)

# errors in the files or flags handed to a command rather than in the answer
INPUT_ERRORS = (
    AmbiguityError, BindingError, ClosureError, InstanceInvariantError, PreconditionError,
    SchemaError, UnsupportedError, UnsupportedFormatError, WalkReferenceError,
)

METHODS = ('brute', 'nn', 'double-tree', 'christofides')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='t3co',
        description="Parse, explain, validate and solve TSP variant definitions",
    )
    parser.add_argument('--json', action='store_true', help="machine-readable output on stdout")
    parser.add_argument('--log-level', choices=LEVELS, type=str.upper, default=None,
                        help="log level for stderr (default from T3CO_LOG_LEVEL or WARNING)")
    parser.add_argument('--config', default=None, help="settings file (default ./t3co.toml)")
    subparsers = parser.add_subparsers(dest='command', required=True)

    parse_cmd = subparsers.add_parser('parse', help="parse a definition and print it canonically")
    parse_cmd.add_argument('file')
    parse_cmd.add_argument('--notation', choices=tuple(NOTATIONS), default='auto',
                           help="notation the file must use")
    parse_cmd.add_argument('--emit', choices=('long', 'short', 'ast'), default='short')
    parse_cmd.set_defaults(func=cmd_parse)

    explain_cmd = subparsers.add_parser('explain', help="list every attribute of a definition")
    explain_cmd.add_argument('file')
    explain_cmd.set_defaults(func=cmd_explain)

    validate_cmd = subparsers.add_parser('validate', help="check a solution against a variant and instance")
    validate_cmd.add_argument('--variant', required=True)
    validate_cmd.add_argument('--instance', required=True, help=".t3i or TSPLIB (.tsp, .atsp) file")
    validate_cmd.add_argument('--solution', required=True)
    validate_cmd.set_defaults(func=cmd_validate)

    solve_cmd = subparsers.add_parser('solve', help="solve an instance exactly or heuristically")
    solve_cmd.add_argument('--variant', required=True)
    solve_cmd.add_argument('--instance', required=True, help=".t3i or TSPLIB (.tsp, .atsp) file")
    solve_cmd.add_argument('--method', choices=METHODS, default='brute')
    solve_cmd.add_argument('--max-nodes', type=int, default=None)
    solve_cmd.add_argument('--max-walk-edges', type=int, default=None)
    solve_cmd.add_argument('--time-budget', type=float, default=None, help="seconds")
    solve_cmd.add_argument('--workers', type=int, default=None)
    solve_cmd.add_argument('--start', default=None, help="first node of the nearest neighbor tour")
    solve_cmd.set_defaults(func=cmd_solve)

    catalog_cmd = subparsers.add_parser('catalog', help="browse and verify the variant catalog")
    actions = catalog_cmd.add_subparsers(dest='action', required=True)
    list_cmd = actions.add_parser('list')
    list_cmd.add_argument('--family', default=None)
    show_cmd = actions.add_parser('show')
    show_cmd.add_argument('id')
    actions.add_parser('verify')
    catalog_cmd.set_defaults(func=cmd_catalog)

    return parser


def run(argv: Optional[Sequence[str]] = None, environ=None) -> int:
    """
    Parse arguments and run one command.

    Args:
        argv: arguments without the program name, sys.argv[1:] by default
        environ: environment mapping, os.environ by default

    Returns:
        int: the exit status
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    settings = SettingsManager(args.config, environ)
    try:
        configure_logging(args.log_level or settings.log_level)
        return args.func(args, settings)
    except OSError as e:
        print(f"Error: cannot read {e.filename or 'file'}: {e.strerror or e}", file=sys.stderr)
        return EXIT_USAGE
    except INPUT_ERRORS as e:
        print(f"Error: {str(e)}", file=sys.stderr)
        return EXIT_USAGE
    except T3coError as e:
        print(f"Error: {str(e)}", file=sys.stderr)
        return EXIT_NEGATIVE
    except ValueError as e:
        # configuration and limit errors
        print(f"Error: {str(e)}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as e:
        print(f"Unexpected error: {str(e)}", file=sys.stderr)
        if settings.debug:
            print(traceback.format_exc(), file=sys.stderr)
        return EXIT_USAGE
