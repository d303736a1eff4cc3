#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from __future__ import annotations

from typing import List

from semantics.model import ResolvedVariant
from semantics.registry import REGISTRY


def _row(name: str, value: str, meaning: str) -> str:
    return f"  {name:<12} {value:<28} {meaning}"


def _cost_line(signature) -> str:
    domain = {'edges': 'E', 'nodes': 'V', 'edge-pairs': 'E × E'}[signature.domain]
    text = f"{signature.name} : {domain} ↦ {signature.range_tag}"
    if signature.is_family:
        text += f" (family over {signature.family_index} = 1..{signature.family_upper})"
    prop = signature.declared_property
    if prop is not None:
        parts = ([prop.tag + (f"({', '.join(prop.args)})" if prop.args else '')] if prop.tag else [])
        parts += sorted(prop.params)
        if prop.alpha:
            parts.append(f"α = {prop.alpha}")
        text += f", property {' '.join(parts)}"
    if signature.partial:
        text += ", partial"
    if signature.temporal is not None:
        args = f"({', '.join(signature.temporal.args)})" if signature.temporal.args else ''
        text += f", temporal {signature.temporal.tag}{args}"
    return text


def explain(variant: ResolvedVariant) -> str:
    """Human-readable dump of every attribute with its meaning."""
    tour = variant.tour
    group = variant.group
    covering = variant.covering
    values = {
        ('alpha', 'count'): str(variant.count),
        ('beta', 'traversals'): variant.traversal.label(),
        ('beta', 'visits'): variant.visits,
        ('beta', 'group'): (f"{group.kind}({group.multiplicity}"
                            + (f", parts {group.parts}" if group.parts else '')
                            + ''.join(f", {p}" for p in group.params) + ')') if group else 'none',
        ('beta', 'covering'): (f"{covering.scope}({covering.cost}, {covering.relation} {covering.bound})"
                               if covering else 'none'),
        ('gamma', 'start'): str(tour.start),
        ('gamma', 'end'): str(tour.end),
        ('gamma', 'circuit'): str(tour.circuit),
        ('gamma', 'graphtype'): tour.graphtype.tag + (f"({', '.join(tour.graphtype.args)})"
                                                      if tour.graphtype.args else ''),
        ('gamma', 'edgetype'): tour.edgetype or 'unspecified',
        ('gamma', 'precedences'): tour.precedences,
        ('gamma', 'cluster'): (f"{tour.cluster.kind}({', '.join(tour.cluster.params)})"
                               if tour.cluster else 'none'),
    }
    open_names = {(item.field, item.name): item for item in variant.open_attributes}
    lines: List[str] = []
    for field_kind, title in (('alpha', 'α traveler'), ('beta', 'β targets'), ('gamma', 'γ tour')):
        lines.append(title)
        for spec in REGISTRY.attributes(field_kind):
            value = values[(field_kind, spec.name)]
            if (field_kind, spec.name) in open_names:
                value = ' or '.join(open_names[(field_kind, spec.name)].options)
            lines.append(_row(spec.name, value, spec.meaning))
    lines.append('δ costs')
    for signature in variant.costs:
        lines.append(f"  {_cost_line(signature)}")
    for item in variant.open_attributes:
        if item.field == 'delta':
            lines.append(f"  {item.name} is open: {' or '.join(item.options)}")
    lines.append('ε objectives')
    for statement in variant.objectives:
        kind = 'constraint' if statement.is_constraint else statement.sense
        lines.append(f"  {type(statement).__name__:<16} {kind:<10} {statement.label()}")
    if variant.has_extension:
        tag = f"⊕{variant.extension_tag}"
        lines.append(f"{tag} extension")
        for annotation in variant.annotations:
            lines.append(f"  ⊕{annotation.tag}: {annotation.text}")
    return '\n'.join(lines)
