#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Canonical printer for both notations.

Canonical text uses Unicode tokens, single spaces and "; " separators. A
tree is printed in its own notation unless another one is requested, in
which case attribute names are dropped or restored following the
shorthand conventions.
"""

from __future__ import annotations

from typing import List, Optional

from grammar.ast_nodes import (
    FIELD_SYMBOLS, LONGHAND, SHORTHAND,
    Alternatives, Attribute, BinOp, Call, Card, Chain, Compl, CostFunctionNode, Expr,
    Extremum, FieldNode, ForAll, IndexedName, Name, Neg, Num, Objective, Optimize,
    Paren, RelValue, SetBuilder, SetLit, SetRange, Summation, VariantAst, Wildcard,
)
from grammar.lexer import COMBINING_MACRON


def _script(expr: Expr) -> str:
    return '{' + render_expr(expr) + '}'


def render_expr(expr: Expr) -> str:
    """Render one expression node."""
    if isinstance(expr, Num):
        return expr.text
    if isinstance(expr, Name):
        return expr.text
    if isinstance(expr, Compl):
        return expr.name + COMBINING_MACRON
    if isinstance(expr, Call):
        return f"{render_expr(expr.func)}({', '.join(render_expr(a) for a in expr.args)})"
    if isinstance(expr, Paren):
        return '(' + ', '.join(render_expr(item) for item in expr.items) + ')'
    if isinstance(expr, SetLit):
        return '{' + ', '.join(render_expr(item) for item in expr.items) + '}'
    if isinstance(expr, SetRange):
        return '{' + f"{render_expr(expr.first)}, …, {render_expr(expr.last)}" + '}'
    if isinstance(expr, SetBuilder):
        return '{' + f"{render_expr(expr.element)} : {render_expr(expr.condition)}" + '}'
    if isinstance(expr, BinOp):
        return f"{render_expr(expr.left)} {expr.op} {render_expr(expr.right)}"
    if isinstance(expr, Neg):
        return f"−{render_expr(expr.operand)}"
    if isinstance(expr, Chain):
        parts = [render_expr(expr.operands[0])]
        for relation, operand in zip(expr.relations, expr.operands[1:]):
            parts.append(f"{relation} {render_expr(operand)}")
        return ' '.join(parts)
    if isinstance(expr, RelValue):
        return f"{expr.relation} {render_expr(expr.operand)}"
    if isinstance(expr, Card):
        return f"|{render_expr(expr.operand)}|"
    if isinstance(expr, Extremum):
        head = expr.op
        if expr.index:
            head += f"_{expr.index}" if expr.index.isalnum() else '_{' + expr.index + '}'
        return f"{head} {render_expr(expr.operand)}"
    if isinstance(expr, Summation):
        text = '∑_' + _script(expr.index)
        if expr.upper is not None:
            text += '^' + _script(expr.upper)
        return f"{text} {render_expr(expr.body)}"
    if isinstance(expr, ForAll):
        return f"∀ {expr.var} ∈ {render_expr(expr.domain)} : {render_expr(expr.body)}"
    if isinstance(expr, Optimize):
        return f"{expr.sense} {render_expr(expr.operand)}"
    if isinstance(expr, Wildcard):
        return '*'
    if isinstance(expr, Alternatives):
        return ' or '.join(render_expr(option) for option in expr.options)
    if isinstance(expr, IndexedName):
        return '{' + expr.base + '}_' + _script(expr.index) + '^' + _script(expr.upper)
    raise TypeError(f"Cannot render {type(expr).__name__}")


def render_attribute(attribute: Attribute) -> str:
    value = render_expr(attribute.value) if attribute.value is not None else ''
    if attribute.name is not None:
        if attribute.relation is None:
            return attribute.name
        return f"{attribute.name} {attribute.relation} {value}"
    if attribute.relation is None:
        return value
    separator = '' if isinstance(attribute.value, Num) else ' '
    return f"{attribute.relation}{separator}{value}"


def render_cost_function(node: CostFunctionNode) -> str:
    text = f"{render_expr(node.name)} : {render_expr(node.domain)} ↦ {render_expr(node.range)}"
    for attribute in node.attributes:
        text += ', ' + render_attribute(attribute)
    return text


def render_item(item) -> str:
    if isinstance(item, Attribute):
        return render_attribute(item)
    if isinstance(item, CostFunctionNode):
        return render_cost_function(item)
    if isinstance(item, Objective):
        return render_expr(item.expr)
    raise TypeError(f"Cannot render {type(item).__name__}")


def _suffix(ast: VariantAst) -> str:
    if ast.extension is None:
        return ''
    return '^{⊕' + ast.extension.tag + '}'


def _annotation_lines(ast: VariantAst) -> List[str]:
    if ast.extension is None:
        return []
    return [f"⊕{a.tag}: {a.text}" for a in ast.extension.annotations]


def render(ast: VariantAst, notation: Optional[str] = None) -> str:
    """
    Print a parse tree as canonical text.

    Args:
        ast: the tree to print
        notation: 'longhand' or 'shorthand'; defaults to the tree's own notation

    Returns:
        str: canonical text; ⊕ annotation lines, if any, precede the definition
    """
    target = notation or ast.notation
    if target != ast.notation:
        from grammar.convert import convert_notation

        ast = convert_notation(ast, target)
    if target == SHORTHAND:
        fields = ['; '.join(render_item(item) for item in f.items) for f in ast.fields]
        body = '⟨ ' + ' ∣ '.join(fields) + ' ⟩'
    elif target == LONGHAND:
        body = '⟨ ' + ' '.join(_render_long_field(f) for f in ast.fields) + ' ⟩'
    else:
        raise ValueError(f"Unknown notation: {target}")
    return '\n'.join(_annotation_lines(ast) + [body + _suffix(ast)])


def _render_long_field(node: FieldNode) -> str:
    text = FIELD_SYMBOLS[node.kind] + ':'
    for item in node.items:
        text += ' ' + render_item(item) + ';'
    return text
