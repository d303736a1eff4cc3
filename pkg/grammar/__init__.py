#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from .ast_nodes import (
    FIELD_KINDS, LONGHAND, SHORTHAND,
    Attribute, CostFunctionNode, Extension, FieldNode, Objective, SourceSpan, VariantAst,
)
from .lexer import tokenize
from .parser import AUTO, parse
from .render import render, render_expr
from .convert import convert_notation
from .lint import lint

__all__ = [
    'FIELD_KINDS', 'LONGHAND', 'SHORTHAND',
    'Attribute', 'CostFunctionNode', 'Extension', 'FieldNode', 'Objective', 'SourceSpan', 'VariantAst',
    'tokenize', 'AUTO', 'parse', 'render', 'render_expr', 'convert_notation', 'lint',
]
