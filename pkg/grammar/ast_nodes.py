#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Parse-tree node types for variant definitions.

Every node carries a SourceSpan that is ignored by equality, so a tree
parsed from canonical text compares equal to the tree it was rendered from.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Tuple

LONGHAND = 'longhand'
SHORTHAND = 'shorthand'

FIELD_KINDS = ('alpha', 'beta', 'gamma', 'delta', 'epsilon')
FIELD_SYMBOLS = {'alpha': 'α', 'beta': 'β', 'gamma': 'γ', 'delta': 'δ', 'epsilon': 'ε'}
FIELD_LABELS = {
    'α': 'alpha', 'alpha': 'alpha', 'traveler': 'alpha', 'traveller': 'alpha',
    'β': 'beta', 'beta': 'beta', 'target': 'beta', 'targets': 'beta',
    'γ': 'gamma', 'gamma': 'gamma', 'tour': 'gamma',
    'δ': 'delta', 'delta': 'delta', 'costs': 'delta', 'cost': 'delta',
    'ε': 'epsilon', 'epsilon': 'epsilon', 'objective': 'epsilon', 'objectives': 'epsilon',
}


@dataclass(frozen=True)
class SourceSpan:
    """Code-point offsets into the source text plus 1-based line and column of ``begin``."""
    begin: int
    end: int
    line: int
    column: int

    def __post_init__(self):
        if self.begin > self.end:
            raise ValueError("SourceSpan begin after end")

    def cover(self, other: Optional['SourceSpan']) -> 'SourceSpan':
        if other is None:
            return self
        first = self if self.begin <= other.begin else other
        return SourceSpan(first.begin, max(self.end, other.end), first.line, first.column)


def _span():
    return field(default=None, compare=False, repr=False)


class Expr:
    """Base class of expression nodes"""
    span: Optional[SourceSpan]


@dataclass(frozen=True)
class Num(Expr):
    text: str
    span: Optional[SourceSpan] = _span()


@dataclass(frozen=True)
class Name(Expr):
    text: str
    span: Optional[SourceSpan] = _span()

    @property
    def base(self) -> str:
        return self.text.split('_', 1)[0]

    @property
    def subscript(self) -> Optional[str]:
        if '_' not in self.text:
            return None
        sub = self.text.split('_', 1)[1]
        if sub.startswith('{') and sub.endswith('}'):
            sub = sub[1:-1]
        return sub


@dataclass(frozen=True)
class Compl(Expr):
    """Complement of a node cost function, p̄"""
    name: str
    span: Optional[SourceSpan] = _span()


@dataclass(frozen=True)
class Call(Expr):
    func: Expr
    args: Tuple[Expr, ...]
    span: Optional[SourceSpan] = _span()


@dataclass(frozen=True)
class Paren(Expr):
    """Parenthesised expression, or a parenthesised comma list"""
    items: Tuple[Expr, ...]
    span: Optional[SourceSpan] = _span()


@dataclass(frozen=True)
class SetLit(Expr):
    items: Tuple[Expr, ...]
    span: Optional[SourceSpan] = _span()


@dataclass(frozen=True)
class SetRange(Expr):
    """{first, …, last}"""
    first: Expr
    last: Expr
    span: Optional[SourceSpan] = _span()


@dataclass(frozen=True)
class SetBuilder(Expr):
    """{element : condition}"""
    element: Expr
    condition: Expr
    span: Optional[SourceSpan] = _span()


@dataclass(frozen=True)
class BinOp(Expr):
    op: str
    left: Expr
    right: Expr
    span: Optional[SourceSpan] = _span()


@dataclass(frozen=True)
class Neg(Expr):
    operand: Expr
    span: Optional[SourceSpan] = _span()


@dataclass(frozen=True)
class Chain(Expr):
    """Relational chain a ≤ b ≤ c"""
    operands: Tuple[Expr, ...]
    relations: Tuple[str, ...]
    span: Optional[SourceSpan] = _span()


@dataclass(frozen=True)
class RelValue(Expr):
    """Value with a leading relation, e.g. ``≥ once`` inside partition(≥ once)"""
    relation: str
    operand: Expr
    span: Optional[SourceSpan] = _span()


@dataclass(frozen=True)
class Card(Expr):
    operand: Expr
    span: Optional[SourceSpan] = _span()


@dataclass(frozen=True)
class Extremum(Expr):
    """min/max over a set, optionally indexed as in max_i"""
    op: str
    index: Optional[str]
    operand: Expr
    span: Optional[SourceSpan] = _span()


@dataclass(frozen=True)
class Summation(Expr):
    index: Expr
    upper: Optional[Expr]
    body: Expr
    span: Optional[SourceSpan] = _span()


@dataclass(frozen=True)
class ForAll(Expr):
    var: str
    domain: Expr
    body: Expr
    span: Optional[SourceSpan] = _span()


@dataclass(frozen=True)
class Optimize(Expr):
    sense: str
    operand: Expr
    span: Optional[SourceSpan] = _span()


@dataclass(frozen=True)
class Wildcard(Expr):
    span: Optional[SourceSpan] = _span()


@dataclass(frozen=True)
class Alternatives(Expr):
    options: Tuple[Expr, ...]
    span: Optional[SourceSpan] = _span()


@dataclass(frozen=True)
class IndexedName(Expr):
    """Indexed family {base}_{index}^{upper}"""
    base: str
    index: Expr
    upper: Expr
    span: Optional[SourceSpan] = _span()


@dataclass(frozen=True)
class Attribute:
    name: Optional[str]
    relation: Optional[str]
    value: Optional[Expr]
    span: Optional[SourceSpan] = _span()


@dataclass(frozen=True)
class CostFunctionNode:
    name: Expr
    domain: Expr
    range: Expr
    attributes: Tuple[Attribute, ...] = ()
    span: Optional[SourceSpan] = _span()


@dataclass(frozen=True)
class Objective:
    expr: Expr
    span: Optional[SourceSpan] = _span()


@dataclass(frozen=True)
class FieldNode:
    kind: str
    items: Tuple = ()
    label: Optional[str] = field(default=None, compare=False)
    span: Optional[SourceSpan] = _span()


@dataclass(frozen=True)
class Annotation:
    tag: str
    text: str


@dataclass(frozen=True)
class Extension:
    """⊕ marker after the closing bracket; tag is '' for a plain ⊕"""
    tag: str = ''
    annotations: Tuple[Annotation, ...] = ()
    raw: str = field(default='', compare=False)


@dataclass(frozen=True)
class VariantAst:
    notation: str
    fields: Tuple[FieldNode, ...]
    extension: Optional[Extension] = None
    span: Optional[SourceSpan] = _span()

    def field(self, kind: str) -> FieldNode:
        return self.fields[FIELD_KINDS.index(kind)]
