#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Resolution of parse trees into typed variant models.

Named attributes bind directly. An unnamed value binds to the single
attribute of its field that owns the value form; zero or several owners is
a resolution error.
"""

from __future__ import annotations

from dataclasses import replace
from typing import Dict, List, Optional, Tuple

from core.costs import EDGE_PAIRS, EDGES, NODES, normalize_range_tag
from core.errors import RegistryError, ResolutionError
from grammar.ast_nodes import (
    Alternatives, Attribute, BinOp, Call, Chain, CostFunctionNode, Expr, IndexedName,
    Name, Num, Paren, RelValue, SetLit, VariantAst, Wildcard,
)
from grammar.render import render_expr
from semantics.model import (
    VISITS_ALWAYS, VISITS_AT_LEAST_ONCE, VISITS_AT_MOST_ONCE, VISITS_DEFAULT, VISITS_ONCE,
    ClusterSpec, CostSignature, CountSpec, CoveringSpec, GraphType, GroupSpec, OpenAttribute,
    PropertySpec, ResolvedVariant, TemporalSpec, TourSpec, TraversalSpec,
)
from semantics.objectives import TemplateObjective, classify_objective
from semantics.registry import (
    BOOLEAN, FALSE_WORDS, REGISTRY, TRUE_WORDS, AttributeSpec, head_word, is_param_word,
    is_scaled_triangle, is_traversal_amount, scaled_triangle_symbol,
)

_DOMAINS = {'E': EDGES, 'V': NODES}
_PROPERTY_ALIASES = {'euclid': 'euclidean'}
_PARAM_ALIASES = {'symmetry': 'symmetric'}


def _words_of(expr: Expr) -> Tuple[str, ...]:
    return tuple(render_expr(arg) for arg in getattr(expr, 'args', ()))


def _boolean(value: Optional[Expr]) -> Optional[bool]:
    if value is None:
        return True
    if isinstance(value, Name) and value.text in TRUE_WORDS:
        return True
    if isinstance(value, Name) and value.text in FALSE_WORDS:
        return False
    return None


def _is_open(value: Optional[Expr]) -> bool:
    return isinstance(value, (Wildcard, Alternatives))


def _open_options(relation: Optional[str], value: Expr) -> Tuple[str, ...]:
    if isinstance(value, Wildcard):
        return ('*',)
    options = []
    for option in value.options:
        text = render_expr(option)
        if relation and relation != '=' and not isinstance(option, RelValue):
            text = f"{relation} {text}"
        elif relation == '=' and not isinstance(option, RelValue) and isinstance(option, Num):
            text = f"= {text}"
        options.append(text)
    return tuple(options)


class _Builder:
    """Mutable collection of attribute values while a definition is resolved."""

    def __init__(self):
        self.values: Dict[str, object] = {}
        self.open: List[OpenAttribute] = []

    def set(self, name: str, value, attribute: Attribute):
        if name in self.values and self.values[name] != value:
            raise ResolutionError(
                f"Attribute {name} given twice with different values: "
                f"{self.values[name]} and {value}")
        self.values[name] = value

    def get(self, name: str, default=None):
        return self.values.get(name, default)


# attribute binding

def bind_attribute(field_kind: str, attribute: Attribute) -> Tuple[Optional[AttributeSpec], Optional[str], Optional[Expr]]:
    """
    Determine the attribute an entry sets.

    Returns:
        tuple: (spec, relation, value); spec is None for boolean-false
            longhand forms that leave the default in place
    """
    relation, value = attribute.relation, attribute.value
    if attribute.name is not None:
        name = attribute.name
        try:
            spec = REGISTRY.spec(field_kind, name)
        except RegistryError:
            owner = REGISTRY.word_owner(field_kind, name)
            flag = _boolean(value) if relation == '=' else None
            if owner is None or flag is None:
                raise
            if not flag:
                return None, None, None
            return owner, None, Name(name, attribute.span)
        if name == 'visits' and relation is not None and not _is_open(value) and is_traversal_amount(value):
            return REGISTRY.spec(field_kind, 'traversals'), relation, value
        return spec, relation, value
    if _is_open(value) and not isinstance(value, Alternatives):
        raise ResolutionError(f"Wildcard without attribute name in the {field_kind} field")
    candidates = REGISTRY.candidates(field_kind, relation, value)
    text = render_expr(value) if relation is None else f"{relation} {render_expr(value)}"
    if not candidates:
        raise ResolutionError(f"No attribute of the {field_kind} field takes the value {text!r}")
    if len(candidates) > 1:
        raise ResolutionError(f"Value {text!r} is ambiguous in the {field_kind} field",
                              [spec.name for spec in candidates])
    return candidates[0], relation, value


def _traversal(relation: Optional[str], value: Expr) -> TraversalSpec:
    relation = relation or '='
    value_set = None
    if isinstance(value, Chain):
        value_set = tuple(render_expr(item) for item in value.operands[1].items)
        value = value.operands[0]
    if isinstance(value, Num):
        amount = value.text
    elif isinstance(value, Name) and value.text == 'd':
        amount = 'd'
    else:
        amount = 'd(v)'
    return TraversalSpec(relation, amount, value_set)


def _visits(relation: Optional[str], value: Expr) -> str:
    word = value.text
    if word == 'always':
        return VISITS_ALWAYS
    if relation == '≥':
        return VISITS_AT_LEAST_ONCE
    if relation == '≤':
        return VISITS_AT_MOST_ONCE
    return VISITS_ONCE


def _multiplicity(expr: Expr) -> Optional[str]:
    if isinstance(expr, RelValue) and head_word(expr.operand) == 'once':
        return {'≥': VISITS_AT_LEAST_ONCE, '≤': VISITS_AT_MOST_ONCE}.get(expr.relation, VISITS_ONCE)
    if isinstance(expr, Name) and expr.text == 'once':
        return VISITS_ONCE
    return None


def _group(value: Expr) -> GroupSpec:
    kind = head_word(value)
    args = getattr(value, 'args', ())
    multiplicity = VISITS_ONCE
    parts = '2' if kind == 'bipartition' else None
    params = []
    for arg in args:
        found = _multiplicity(arg)
        if found is not None:
            multiplicity = found
        elif isinstance(arg, Chain) and render_expr(arg.operands[0]) == 'k':
            parts = render_expr(arg)
        else:
            params.append(render_expr(arg))
    if kind == 'k-partition' and parts is None:
        parts = 'k'
    return GroupSpec(kind, multiplicity, parts, tuple(params))


def _covering(value: Call) -> CoveringSpec:
    if len(value.args) != 2 or not isinstance(value.args[1], RelValue):
        raise ResolutionError(f"covering takes (cost, ≤ bound), got {render_expr(value)!r}")
    cost, bound = value.args
    return CoveringSpec(head_word(value), render_expr(cost), bound.relation, render_expr(bound.operand))


def _graphtype(value: Expr) -> GraphType:
    if isinstance(value, Call):
        return GraphType(head_word(value), _words_of(value))
    return GraphType(value.text)


def _cluster(value: Expr) -> ClusterSpec:
    return ClusterSpec(head_word(value), _words_of(value))


def _apply_attribute(builder: _Builder, field_kind: str, attribute: Attribute):
    spec, relation, value = bind_attribute(field_kind, attribute)
    if spec is None:
        return
    if _is_open(value):
        builder.open.append(OpenAttribute(field_kind, spec.name, _open_options(relation, value)))
        return
    name = spec.name
    if spec.kind == BOOLEAN:
        if attribute.name is None:
            builder.set(name, True, attribute)
            return
        flag = _boolean(value) if relation in (None, '=') else None
        if flag is None:
            raise ResolutionError(f"{name} takes True or False, got {render_expr(value)!r}")
        builder.set(name, flag, attribute)
        return
    if name == 'count':
        if relation is None and isinstance(value, Num):
            relation = '='
        builder.set(name, CountSpec(relation or '=', render_expr(value)), attribute)
    elif name == 'traversals':
        if not (is_traversal_amount(value) or (isinstance(value, Name) and value.text == 'd_v')):
            raise ResolutionError(f"traversals takes a number, d or d(v), got {render_expr(value)!r}")
        builder.set(name, _traversal(relation, value), attribute)
    elif name == 'visits':
        if not (isinstance(value, Name) and value.text in spec.words):
            raise ResolutionError(f"visits takes always or once, got {render_expr(value)!r}")
        builder.set(name, _visits(relation, value), attribute)
    elif name == 'group':
        builder.set(name, _group(value), attribute)
    elif name == 'covering':
        if not isinstance(value, Call):
            raise ResolutionError(f"covering takes all(c, ≤ b) or subset(c, ≤ b), got {render_expr(value)!r}")
        builder.set(name, _covering(value), attribute)
    elif name == 'graphtype':
        builder.set(name, _graphtype(value), attribute)
    elif name in ('edgetype', 'precedences'):
        builder.set(name, head_word(value), attribute)
    elif name == 'cluster':
        builder.set(name, _cluster(value), attribute)
    else:
        raise ResolutionError(f"Attribute {name} is not valid in the {field_kind} field")


# cost functions

def _domain(expr: Expr) -> str:
    if isinstance(expr, Name) and expr.text in _DOMAINS:
        return _DOMAINS[expr.text]
    if isinstance(expr, BinOp) and expr.op == '×' and render_expr(expr) == 'E × E':
        return EDGE_PAIRS
    raise ResolutionError(f"Unsupported cost function domain {render_expr(expr)!r}")


def _property(values: List[Tuple[Optional[str], Expr]]) -> PropertySpec:
    tag, args, params, alpha = None, (), set(), None

    def add_param(word):
        nonlocal alpha
        if is_scaled_triangle(word):
            alpha = scaled_triangle_symbol(word)
            params.add('α-triangle')
        else:
            params.add(_PARAM_ALIASES.get(word, word))

    for _, value in values:
        if isinstance(value, Paren):
            for item in value.items:
                add_param(head_word(item))
            continue
        word = head_word(value)
        if is_param_word(word):
            add_param(word)
            continue
        if tag is not None and tag != _PROPERTY_ALIASES.get(word, word):
            raise ResolutionError(f"Cost function declares two properties: {tag} and {word}")
        tag = _PROPERTY_ALIASES.get(word, word)
        args = _words_of(value)
    return PropertySpec(tag, frozenset(params), alpha, args)


def _cost_signature(node: CostFunctionNode, builder: _Builder) -> CostSignature:
    family_index = family_upper = None
    if isinstance(node.name, IndexedName):
        index = node.name.index
        family_index = render_expr(index.operands[0]) if isinstance(index, Chain) else render_expr(index)
        family_upper = render_expr(node.name.upper)
        base = node.name.base
        name = base if base.endswith(f"_{family_index}") else f"{base}_{family_index}"
    else:
        name = node.name.text
    domain = _domain(node.domain)
    range_tag = normalize_range_tag(render_expr(node.range))
    property_values, partial, temporal = [], False, None
    for attribute in node.attributes:
        spec, relation, value = bind_attribute('delta', attribute)
        if spec is None:
            continue
        if _is_open(value):
            builder.open.append(OpenAttribute('delta', f"{name}.{spec.name}", _open_options(relation, value)))
            continue
        if spec.name == 'property':
            property_values.append((relation, value))
        elif spec.name == 'partial':
            flag = True if attribute.name is None else _boolean(value)
            if flag is None:
                raise ResolutionError(f"partial takes True or False, got {render_expr(value)!r}")
            partial = flag
        elif spec.name == 'temporal':
            if temporal is not None:
                raise ResolutionError(f"Cost function {name} declares two temporal values")
            temporal = TemporalSpec(head_word(value), _words_of(value))
    prop = _property(property_values) if property_values else None
    return CostSignature(name, domain, range_tag, prop, partial, temporal, family_index, family_upper)


# entry point

def resolve(ast: VariantAst) -> ResolvedVariant:
    """
    Resolve a parsed definition.

    Args:
        ast: parse tree in either notation

    Returns:
        ResolvedVariant: typed model; costs sorted by name

    Raises:
        ResolutionError: Unnamed value with no or several owning attributes
        RegistryError: Unknown attribute name
        UnsupportedObjectiveError: Objective outside the statement catalog
    """
    builder = _Builder()
    for kind in ('alpha', 'beta', 'gamma'):
        for attribute in ast.field(kind).items:
            _apply_attribute(builder, kind, attribute)

    signatures = sorted((_cost_signature(node, builder) for node in ast.field('delta').items),
                        key=lambda signature: signature.name)
    names = [signature.name for signature in signatures]
    if len(set(names)) != len(names):
        raise ResolutionError(f"Cost function declared twice: {', '.join(sorted(names))}")
    lookup: Dict[str, CostSignature] = {}
    for signature in signatures:
        lookup[signature.name] = signature
        if signature.is_family:
            lookup.setdefault(signature.base, signature)

    objectives = []
    for objective in ast.field('epsilon').items:
        statement = classify_objective(objective.expr, lookup)
        if isinstance(statement, TemplateObjective):
            builder.open.append(OpenAttribute('epsilon', 'objective', (statement.text,)))
        objectives.append(statement)

    tour = TourSpec(
        start=builder.get('start', False),
        end=builder.get('end', False),
        circuit=builder.get('circuit', False),
        graphtype=builder.get('graphtype', GraphType()),
        edgetype=builder.get('edgetype'),
        precedences=builder.get('precedences', 'none'),
        cluster=builder.get('cluster'),
    )
    extension = ast.extension
    return ResolvedVariant(
        count=builder.get('count', CountSpec()),
        traversal=builder.get('traversals', TraversalSpec()),
        visits=builder.get('visits', VISITS_DEFAULT),
        group=builder.get('group'),
        covering=builder.get('covering'),
        tour=tour,
        costs=tuple(signatures),
        objectives=tuple(objectives),
        open_attributes=tuple(sorted(builder.open, key=lambda item: (item.field, item.name))),
        extension_tag=extension.tag if extension is not None else None,
        annotations=extension.annotations if extension is not None else (),
        notation=ast.notation,
    )


def _statement_key(statement) -> str:
    return f"{type(statement).__name__}:{statement!r}"


def resolved_equal(a: ResolvedVariant, b: ResolvedVariant) -> bool:
    """Structural equality ignoring notation, attribute order and objective order."""
    if a == b:
        return True
    reordered_a = sorted(a.objectives, key=_statement_key)
    reordered_b = sorted(b.objectives, key=_statement_key)
    if reordered_a != reordered_b:
        return False
    return replace(a, objectives=()) == replace(b, objectives=())
