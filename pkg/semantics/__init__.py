#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from .model import (
    VISITS_ALWAYS, VISITS_AT_LEAST_ONCE, VISITS_AT_MOST_ONCE, VISITS_DEFAULT, VISITS_ONCE,
    ClusterSpec, CostSignature, CountSpec, CoveringSpec, GraphType, GroupSpec, OpenAttribute,
    PropertySpec, ResolvedVariant, TemporalSpec, TourSpec, TraversalSpec,
)
from .registry import REGISTRY, AttributeRegistry, AttributeSpec
from .objectives import (
    BoundRef, CardinalityVisited, ComplementCost, LinearTerm, LowerBound, MaxLateness, MaxMinEdge,
    Maximize, MinMaxEdge, Minimize, PriceShareSum, PurchaseDemand, TemplateObjective, TimeWindow,
    TotalCost, UpperBound, WindowBound, classify_objective, classify_term,
)
from .resolver import resolve, resolved_equal
from .wellformed import check_wellformed
from .explain import explain

__all__ = [
    'VISITS_ALWAYS', 'VISITS_AT_LEAST_ONCE', 'VISITS_AT_MOST_ONCE', 'VISITS_DEFAULT', 'VISITS_ONCE',
    'ClusterSpec', 'CostSignature', 'CountSpec', 'CoveringSpec', 'GraphType', 'GroupSpec', 'OpenAttribute',
    'PropertySpec', 'ResolvedVariant', 'TemporalSpec', 'TourSpec', 'TraversalSpec',
    'REGISTRY', 'AttributeRegistry', 'AttributeSpec',
    'BoundRef', 'CardinalityVisited', 'ComplementCost', 'LinearTerm', 'LowerBound', 'MaxLateness',
    'MaxMinEdge', 'Maximize', 'MinMaxEdge', 'Minimize', 'PriceShareSum', 'PurchaseDemand',
    'TemplateObjective', 'TimeWindow', 'TotalCost', 'UpperBound', 'WindowBound',
    'classify_objective', 'classify_term',
    'resolve', 'resolved_equal', 'check_wellformed', 'explain',
]
