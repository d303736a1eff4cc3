#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import os
from pathlib import Path
from typing import Optional

try:
    import tomllib
except ImportError:
    import tomli as tomllib

from catalog.manager import DEFAULT_CORPUS
from solvers.limits import SolveLimits
from utils.log import LEVELS

CONFIG_FILE = 't3co.toml'


def _positive_int(value, key: str) -> Optional[int]:
    if value is None or value == '':
        return None
    try:
        number = int(value)
    except (TypeError, ValueError):
        raise ValueError(f"Configuration error: {key} must be an integer, got {value!r}")
    if number <= 0:
        raise ValueError(f"Configuration error: {key} must be positive, got {number}")
    return number


def _positive_float(value, key: str) -> Optional[float]:
    if value is None or value == '':
        return None
    try:
        number = float(value)
    except (TypeError, ValueError):
        raise ValueError(f"Configuration error: {key} must be a number, got {value!r}")
    if number <= 0:
        raise ValueError(f"Configuration error: {key} must be positive, got {number}")
    return number


class SettingsManager:
    """
    Manages toolkit settings: built-in defaults, an optional t3co.toml and
    T3CO_* environment variables, in increasing precedence
    """
    def __init__(self, config_path=None, environ=None):
        self.environ = os.environ if environ is None else environ
        explicit = config_path or self.environ.get('T3CO_CONFIG')
        self.config_path = Path(explicit) if explicit else Path(CONFIG_FILE)
        self.required = bool(explicit)
        self._data = None

    def read_config_file(self):
        """
        Read the TOML settings file

        Returns:
            dict: File contents, empty when no file is present

        Raises:
            ValueError: If a named file is missing or the file is not valid TOML
        """
        if self._data is not None:
            return self._data
        try:
            if not self.config_path.exists():
                if self.required:
                    raise ValueError(f"Settings file not found at {self.config_path}")
                self._data = {}
                return self._data
            with self.config_path.open('rb') as handle:
                self._data = tomllib.load(handle)
            return self._data
        except Exception as e:
            raise ValueError(f"Configuration error: {str(e)}")

    def _section(self, name: str) -> dict:
        section = self.read_config_file().get(name, {})
        if not isinstance(section, dict):
            raise ValueError(f"Configuration error: [{name}] must be a table")
        return section

    def _setting(self, section: str, key: str, env_name: str):
        value = self.environ.get(env_name)
        if value is not None and value != '':
            return value
        return self._section(section).get(key)

    def solve_limits(self) -> SolveLimits:
        """
        Default solver limits; command-line flags override them per run

        Raises:
            ValueError: On non-positive or non-numeric limits
        """
        max_nodes = _positive_int(self._setting('solver', 'max_nodes', 'T3CO_MAX_NODES'), 'max_nodes')
        return SolveLimits(
            max_nodes=max_nodes if max_nodes is not None else SolveLimits.max_nodes,
            max_walk_edges=_positive_int(
                self._setting('solver', 'max_walk_edges', 'T3CO_MAX_WALK_EDGES'), 'max_walk_edges'),
            time_budget=_positive_float(
                self._setting('solver', 'time_budget', 'T3CO_TIME_BUDGET'), 'time_budget'),
            workers=_positive_int(self._setting('solver', 'workers', 'T3CO_WORKERS'), 'workers') or 1,
        )

    @property
    def corpus_dir(self) -> Path:
        value = self._setting('catalog', 'corpus_dir', 'T3CO_CORPUS_DIR')
        return Path(value) if value else DEFAULT_CORPUS

    @property
    def log_level(self) -> str:
        level = str(self._setting('logging', 'level', 'T3CO_LOG_LEVEL') or 'WARNING').upper()
        if level not in LEVELS:
            raise ValueError(f"Configuration error: unknown log level {level}")
        return level

    @property
    def debug(self) -> bool:
        return self.environ.get('T3CO_DEBUG', '0') == '1'
