#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from .model import Instance, KineticTarget, NodeGroup
from .native_format import load_native, save_native
from .binding import bind, epsilon_value, is_solution_supplied
from .tsplib import load_tsplib
from .properties import (
    DECLARED_ONLY, VERIFIED, VIOLATED, PropertyCheck, PropertyReport,
    check_declared_properties, check_properties, pair_costs, recheck,
)
from .closure import closure_edge_id, expand_closure_walk, metric_closure

__all__ = [
    'Instance', 'KineticTarget', 'NodeGroup',
    'load_native', 'save_native',
    'bind', 'epsilon_value', 'is_solution_supplied',
    'load_tsplib',
    'DECLARED_ONLY', 'VERIFIED', 'VIOLATED', 'PropertyCheck', 'PropertyReport',
    'check_declared_properties', 'check_properties', 'pair_costs', 'recheck',
    'closure_edge_id', 'expand_closure_walk', 'metric_closure',
]
