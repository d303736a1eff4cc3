#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Logging setup for the toolkit.

Every module asks for its own logger through ``get_logger(__name__)``. Output
goes to stderr so that stdout stays reserved for machine-readable results.
"""

import logging
import os
import sys

LOG_FORMAT = '[%(asctime)s] %(levelname)s %(name)s: %(message)s'
DATE_FORMAT = '%Y-%m-%d %H:%M:%S'
LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')

_ROOT = 't3co'


def _qualified(name: str) -> str:
    return name if name.startswith(_ROOT) else f"{_ROOT}.{name}"


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(_qualified(name))


def configure_logging(level: str = None, stream=None) -> logging.Logger:
    """
    Install a single stderr handler on the toolkit's root logger.

    Args:
        level: level name; falls back to ``T3CO_LOG_LEVEL`` and then WARNING
        stream: output stream, stderr by default

    Returns:
        logging.Logger: the configured root logger

    Raises:
        ValueError: If the level name is unknown
    """
    level = (level or os.environ.get('T3CO_LOG_LEVEL', 'WARNING')).upper()
    if level not in LEVELS:
        raise ValueError(f"Configuration error: unknown log level {level}")
    root = logging.getLogger(_ROOT)
    for handler in list(root.handlers):
        root.removeHandler(handler)
    handler = logging.StreamHandler(stream or sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT, DATE_FORMAT))
    root.addHandler(handler)
    root.setLevel(level)
    root.propagate = False
    return root
