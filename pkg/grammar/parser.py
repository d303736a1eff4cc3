#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Recursive-descent parser for variant definitions in longhand and shorthand.

Longhand::

    ⟨ α: {attribute ;} β: {attribute ;} γ: {attribute ;}
      δ: {costfunction ;} ε: {objective ;} ⟩ [⊕]

Shorthand::

    ⟨ attributes ∣ attributes ∣ attributes ∣ costfunctions ∣ objectives ⟩ [⊕]

where the lists of a shorthand field are ``;``-separated, hold at least one
item and end without a semicolon.
"""

from __future__ import annotations

import re
from typing import List, Optional, Tuple

from core.errors import MissingFieldError, MixedNotationError, T3coSyntaxError
from grammar import lexer as lx
from grammar.ast_nodes import (
    FIELD_KINDS, FIELD_LABELS, FIELD_SYMBOLS, LONGHAND, SHORTHAND,
    Alternatives, Annotation, Attribute, Call, Card, Chain, Compl, CostFunctionNode,
    Expr, Extension, Extremum, FieldNode, ForAll, IndexedName, Name, Neg, Num,
    Objective, Optimize, Paren, RelValue, SetBuilder, SetLit, SetRange, SourceSpan,
    Summation, VariantAst, Wildcard, BinOp,
)

AUTO = 'auto'

_KEYWORDS = {'min', 'max', 'or'}
_RANGE_BASES = {'ℝ': 'ℝ', 'ℤ': 'ℤ', 'ℕ': 'ℕ', 'ℚ': 'ℚ', 'R': 'ℝ', 'Z': 'ℤ', 'N': 'ℕ', 'Q': 'ℚ'}
_ANNOTATION = re.compile(r'^\s*(?:⊕|\(\+)\s*(\d*)\s*\)?\s*:\s?(.*)$')
_EXTREMUM = re.compile(r'^(min|max)(?:_(\{[^}]*\}|\w+))?$')


def _blank(line: str) -> str:
    return ' ' * len(line)


def _split_preamble(text: str) -> Tuple[str, List[Annotation]]:
    """
    Blank out comment lines and collect ⊕ annotation lines.

    Offsets are preserved so token spans still point into the original text.
    """
    annotations = []
    out = []
    body_started = False
    for line in text.split('\n'):
        stripped = line.strip()
        if stripped.startswith('#'):
            out.append(_blank(line))
            continue
        match = _ANNOTATION.match(line)
        if not body_started and match and stripped and stripped[0] in '⊕(':
            annotations.append(Annotation(match.group(1), match.group(2).strip()))
            out.append(_blank(line))
            continue
        if stripped:
            body_started = True
        out.append(line)
    return '\n'.join(out), annotations


class Parser:
    def __init__(self, tokens: List[lx.Token], notation: str):
        self.tokens = tokens
        self.index = 0
        self.notation = notation
        longhand_hint = (len(tokens) > 2 and tokens[1].kind == lx.IDENT
                         and tokens[1].value in FIELD_LABELS and tokens[2].kind == lx.COLON)
        self.cardinality_bars = longhand_hint or any(token.kind == lx.BAR for token in tokens)
        if not self.cardinality_bars:
            # pure ASCII input: the bar separates fields
            self.tokens = [lx.Token(lx.BAR, '∣', t.span) if t.kind == lx.PIPE else t for t in tokens]

    # token helpers

    @property
    def tok(self) -> lx.Token:
        return self.tokens[self.index]

    def peek(self, offset: int = 1) -> lx.Token:
        index = min(self.index + offset, len(self.tokens) - 1)
        return self.tokens[index]

    def advance(self) -> lx.Token:
        token = self.tokens[self.index]
        if token.kind != lx.EOF:
            self.index += 1
        return token

    def at(self, kind: str, value: Optional[str] = None) -> bool:
        return self.tok.kind == kind and (value is None or self.tok.value == value)

    def expect(self, kind: str, description: Optional[str] = None) -> lx.Token:
        if self.tok.kind != kind:
            self.error(f"Unexpected {self._describe(self.tok)}", {description or kind})
        return self.advance()

    def error(self, message: str, expected=(), cls=T3coSyntaxError):
        raise cls(message, self.tok.span, expected)

    @staticmethod
    def _describe(token: lx.Token) -> str:
        if token.kind == lx.EOF:
            return 'end of input'
        return f"{token.value!r}"

    def span_from(self, begin: SourceSpan) -> SourceSpan:
        previous = self.tokens[self.index - 1] if self.index > 0 else self.tok
        return begin.cover(previous.span)

    def is_label(self, offset: int = 0) -> bool:
        token = self.peek(offset) if offset else self.tok
        following = self.peek(offset + 1)
        return token.kind == lx.IDENT and token.value in FIELD_LABELS and following.kind == lx.COLON

    # definition

    def parse_variant(self, annotations: List[Annotation]) -> VariantAst:
        begin = self.expect(lx.LANGLE, '⟨').span
        detected = LONGHAND if self.is_label() else SHORTHAND
        if self.notation == AUTO:
            self.notation = detected
        elif self.notation != detected:
            self.error(f"Definition is written in {detected} notation, not {self.notation}",
                       {'α:' if self.notation == LONGHAND else '∣'}, MixedNotationError)
        if self.notation == LONGHAND:
            fields = self.parse_longhand_fields()
        else:
            fields = self.parse_shorthand_fields()
        self.expect(lx.RANGLE, '⟩')
        extension = self.parse_extension(annotations)
        self.expect(lx.EOF, 'end of input')
        return VariantAst(self.notation, tuple(fields), extension, self.span_from(begin))

    def parse_extension(self, annotations: List[Annotation]) -> Optional[Extension]:
        raw_begin = self.index
        tag = None
        if self.at(lx.CARET):
            self.advance()
            if self.at(lx.LBRACE):
                self.advance()
                self.expect(lx.OPLUS, '⊕')
                tag = self.advance().value if self.at(lx.NUMBER) else ''
                self.expect(lx.RBRACE, '}')
            else:
                self.expect(lx.OPLUS, '⊕')
                tag = self.advance().value if self.at(lx.NUMBER) else ''
        elif self.at(lx.OPLUS):
            self.advance()
            tag = self.advance().value if self.at(lx.NUMBER) else ''
        elif self.at(lx.LPAREN) and self.peek().kind == lx.PLUS:
            self.advance()
            self.advance()
            tag = self.advance().value if self.at(lx.NUMBER) else ''
            self.expect(lx.RPAREN, ')')
        if tag is None:
            if annotations:
                self.error("Annotation lines need a ⊕ marker after the closing bracket", {'⊕'})
            return None
        raw = ''.join(token.value for token in self.tokens[raw_begin:self.index])
        return Extension(tag, tuple(annotations), raw)

    def parse_longhand_fields(self) -> List[FieldNode]:
        fields = []
        for kind in FIELD_KINDS:
            if not self.is_label() or FIELD_LABELS[self.tok.value] != kind:
                cls = MissingFieldError if (self.at(lx.RANGLE) or self.is_label()) else T3coSyntaxError
                self.error(f"Expected the {FIELD_SYMBOLS[kind]} field", {f"{FIELD_SYMBOLS[kind]}:"}, cls)
            label_token = self.advance()
            self.advance()
            items = []
            while not self.at(lx.RANGLE) and not self.is_label() and not self.at(lx.EOF):
                if self.at(lx.BAR):
                    self.error("Field separator in a longhand definition", {';'}, MixedNotationError)
                items.append(self.parse_item(kind))
                self.expect(lx.SEMI, ';')
            fields.append(FieldNode(kind, tuple(items), label_token.value, self.span_from(label_token.span)))
        if self.is_label():
            self.error("More than five fields", {'⟩'}, MissingFieldError)
        return fields

    def parse_shorthand_fields(self) -> List[FieldNode]:
        fields = []
        for position, kind in enumerate(FIELD_KINDS):
            if position > 0:
                if not self.at(lx.BAR):
                    cls = MissingFieldError if self.at(lx.RANGLE) else T3coSyntaxError
                    self.error(f"Expected the {FIELD_SYMBOLS[kind]} field", {'∣'}, cls)
                self.advance()
            if self.is_label():
                self.error("Field label in a shorthand definition", {'value'}, MixedNotationError)
            begin = self.tok.span
            items = [self.parse_item(kind)]
            while self.at(lx.SEMI):
                self.advance()
                if self.at(lx.BAR) or self.at(lx.RANGLE):
                    self.error("Shorthand fields end without a semicolon", {'value'})
                items.append(self.parse_item(kind))
            fields.append(FieldNode(kind, tuple(items), None, self.span_from(begin)))
        if self.at(lx.BAR):
            self.error("More than five fields", {'⟩'}, MissingFieldError)
        return fields

    def parse_item(self, kind: str):
        if self.at(lx.BAR) or self.at(lx.RANGLE) or self.at(lx.SEMI):
            self.error("Empty field entry", {'value'})
        if kind == 'delta':
            return self.parse_cost_function()
        if kind == 'epsilon':
            return self.parse_objective()
        return self.parse_attribute()

    # items

    def parse_attribute(self) -> Attribute:
        begin = self.tok.span
        if (self.at(lx.IDENT) and self.tok.value not in _KEYWORDS
                and self.peek().kind == lx.REL):
            name = self.advance().value
            relation = self.advance().value
            value = self.parse_value()
            return Attribute(name, relation, value, self.span_from(begin))
        if self.at(lx.REL):
            relation = self.advance().value
            value = self.parse_value()
            return Attribute(None, relation, value, self.span_from(begin))
        value = self.parse_value()
        return Attribute(None, None, value, self.span_from(begin))

    def parse_cost_function(self) -> CostFunctionNode:
        begin = self.tok.span
        if self.at(lx.LBRACE):
            name = self.parse_primary()
            if not isinstance(name, IndexedName):
                self.error("Expected a cost function name", {'name'})
        else:
            token = self.expect(lx.IDENT, 'cost function name')
            name = Name(token.value, token.span)
        self.expect(lx.COLON, ':')
        domain = self.parse_sum()
        self.expect(lx.MAPSTO, '↦')
        value_range = self.parse_range()
        attributes = []
        while self.at(lx.COMMA):
            self.advance()
            attributes.append(self.parse_attribute())
        return CostFunctionNode(name, domain, value_range, tuple(attributes), self.span_from(begin))

    def parse_range(self) -> Expr:
        begin = self.tok.span
        if self.at(lx.IDENT):
            word = self.tok.value.replace('_{', '').replace('}', '')
            base = _RANGE_BASES.get(word[:1]) if len(word) == 1 or not word[1:2].isalnum() else None
            if base is not None:
                self.advance()
                text = base + word[1:].replace('>=', '≥').replace('<=', '≤')
                if len(word) == 1 and self.at(lx.REL) and self.tok.value in ('≥', '>', '≤', '<'):
                    relation = self.advance().value
                    sign = ''
                    if self.at(lx.MINUS):
                        self.advance()
                        sign = '-'
                    bound = self.expect(lx.NUMBER, 'number').value
                    text = f"{base}{relation}{sign}{bound}"
                return Name(text, self.span_from(begin))
        return self.parse_postfix()

    def parse_objective(self) -> Objective:
        begin = self.tok.span
        if self.at(lx.IDENT) and self.tok.value in ('min', 'max'):
            sense = self.advance().value
            operand = self.parse_value()
            expr = Optimize(sense, operand, self.span_from(begin))
        else:
            expr = self.parse_value()
        return Objective(expr, self.span_from(begin))

    # expressions

    def parse_value(self) -> Expr:
        begin = self.tok.span
        options = [self.parse_relational_value()]
        while self.at(lx.IDENT, 'or'):
            self.advance()
            options.append(self.parse_relational_value())
        if len(options) == 1:
            return options[0]
        return Alternatives(tuple(options), self.span_from(begin))

    def parse_relational_value(self) -> Expr:
        begin = self.tok.span
        if self.at(lx.REL):
            relation = self.advance().value
            operand = self.parse_expression()
            return RelValue(relation, operand, self.span_from(begin))
        return self.parse_expression()

    def parse_expression(self) -> Expr:
        if self.at(lx.FORALL):
            return self.parse_forall()
        return self.parse_chain()

    def parse_forall(self) -> Expr:
        begin = self.expect(lx.FORALL, '∀').span
        var = self.expect(lx.IDENT, 'bound variable').value
        if not (self.at(lx.REL) and self.tok.value == '∈'):
            self.error("Expected ∈ after the bound variable", {'∈'})
        self.advance()
        domain = self.parse_primary()
        if self.at(lx.COLON):
            self.advance()
        body = self.parse_expression()
        return ForAll(var, domain, body, self.span_from(begin))

    def parse_chain(self) -> Expr:
        begin = self.tok.span
        operands = [self.parse_sum()]
        relations = []
        while self.at(lx.REL):
            relations.append(self.advance().value)
            operands.append(self.parse_sum())
        if not relations:
            return operands[0]
        return Chain(tuple(operands), tuple(relations), self.span_from(begin))

    def parse_sum(self) -> Expr:
        begin = self.tok.span
        left = self.parse_product()
        while self.at(lx.PLUS) or self.at(lx.MINUS):
            op = '+' if self.advance().kind == lx.PLUS else '−'
            right = self.parse_product()
            left = BinOp(op, left, right, self.span_from(begin))
        return left

    def _starts_operand(self) -> bool:
        token = self.tok
        if token.kind == lx.IDENT:
            return token.value not in _KEYWORDS or bool(_EXTREMUM.match(token.value))
        return token.kind in (lx.NUMBER, lx.LPAREN, lx.COMPL, lx.SUM, lx.INF)

    def parse_product(self) -> Expr:
        begin = self.tok.span
        left = self.parse_unary()
        while True:
            if self.at(lx.TIMES) or self.at(lx.STAR) or self.at(lx.SLASH) or self.at(lx.CROSS):
                token = self.advance()
                op = {lx.TIMES: '·', lx.STAR: '·', lx.SLASH: '/', lx.CROSS: '×'}[token.kind]
                right = self.parse_unary()
            elif isinstance(left, (Num, Paren)) or (isinstance(left, BinOp) and left.op == '·'
                                                    and isinstance(left.right, (Num, Paren))):
                if not self._starts_operand():
                    break
                op = '·'
                right = self.parse_unary()
            else:
                break
            left = BinOp(op, left, right, self.span_from(begin))
        return left

    def parse_unary(self) -> Expr:
        if self.at(lx.MINUS):
            begin = self.advance().span
            operand = self.parse_unary()
            return Neg(operand, self.span_from(begin))
        return self.parse_postfix()

    def parse_postfix(self) -> Expr:
        begin = self.tok.span
        expr = self.parse_primary()
        if isinstance(expr, Name):
            words = [expr.text]
            while self.at(lx.IDENT) and self.tok.value not in _KEYWORDS and not _EXTREMUM.match(self.tok.value):
                words.append(self.advance().value)
            if len(words) > 1:
                expr = Name(' '.join(words), self.span_from(begin))
        while self.at(lx.LPAREN) and isinstance(expr, (Name, Compl, IndexedName)):
            self.advance()
            args = []
            if not self.at(lx.RPAREN):
                args.append(self.parse_value())
                while self.at(lx.COMMA):
                    self.advance()
                    args.append(self.parse_value())
            self.expect(lx.RPAREN, ')')
            if isinstance(expr, Name) and expr.text == 'card' and len(args) == 1:
                expr = Card(args[0], self.span_from(begin))
            else:
                expr = Call(expr, tuple(args), self.span_from(begin))
        return expr

    def parse_primary(self) -> Expr:
        token = self.tok
        begin = token.span
        if token.kind == lx.NUMBER:
            self.advance()
            return Num(token.value, begin)
        if token.kind == lx.INF:
            self.advance()
            return Num('∞', begin)
        if token.kind == lx.STAR:
            self.advance()
            return Wildcard(begin)
        if token.kind == lx.COMPL:
            self.advance()
            return Compl(token.value, begin)
        if token.kind == lx.TILDE:
            self.advance()
            name = self.expect(lx.IDENT, 'cost function name')
            return Compl(name.value, self.span_from(begin))
        if token.kind == lx.IDENT:
            match = _EXTREMUM.match(token.value)
            if match:
                self.advance()
                index = match.group(2)
                if index and index.startswith('{'):
                    index = index[1:-1]
                operand = self.parse_postfix()
                return Extremum(match.group(1), index, operand, self.span_from(begin))
            if token.value in _KEYWORDS:
                self.error(f"Unexpected keyword {token.value!r}", {'expression'})
            self.advance()
            if token.value in ('inf', 'infinity'):
                return Num('∞', begin)
            return Name(token.value, begin)
        if token.kind == lx.LPAREN:
            self.advance()
            items = [self.parse_value()]
            while self.at(lx.COMMA):
                self.advance()
                items.append(self.parse_value())
            self.expect(lx.RPAREN, ')')
            return Paren(tuple(items), self.span_from(begin))
        if token.kind == lx.LBRACE:
            return self.parse_set()
        if token.kind == lx.PIPE:
            self.advance()
            operand = self.parse_sum()
            self.expect(lx.PIPE, '|')
            return Card(operand, self.span_from(begin))
        if token.kind == lx.FORALL:
            return self.parse_forall()
        if token.kind == lx.SUM:
            return self.parse_summation()
        self.error(f"Unexpected {self._describe(token)}", {'expression'})

    def parse_set(self) -> Expr:
        begin = self.expect(lx.LBRACE, '{').span
        if self.at(lx.RBRACE):
            self.advance()
            return SetLit((), self.span_from(begin))
        first = self.parse_value()
        if self.at(lx.COLON):
            self.advance()
            condition = self.parse_value()
            self.expect(lx.RBRACE, '}')
            return SetBuilder(first, condition, self.span_from(begin))
        items = [first]
        while self.at(lx.COMMA):
            self.advance()
            if self.at(lx.ELLIPSIS):
                self.advance()
                self.expect(lx.COMMA, ',')
                last = self.parse_value()
                self.expect(lx.RBRACE, '}')
                if len(items) != 1:
                    self.error("Ranges are written {first, …, last}", {'}'})
                return SetRange(first, last, self.span_from(begin))
            items.append(self.parse_value())
        self.expect(lx.RBRACE, '}')
        if self.at(lx.UNDERSCORE) and len(items) == 1 and isinstance(first, Name):
            return self.parse_indexed_family(first, begin)
        return SetLit(tuple(items), self.span_from(begin))

    def _script(self) -> Expr:
        if self.at(lx.LBRACE):
            self.advance()
            expr = self.parse_value()
            self.expect(lx.RBRACE, '}')
            return expr
        return self.parse_primary()

    def parse_indexed_family(self, base: Name, begin: SourceSpan) -> Expr:
        self.expect(lx.UNDERSCORE, '_')
        index = self._script()
        self.expect(lx.CARET, '^')
        upper = self._script()
        return IndexedName(base.text, index, upper, self.span_from(begin))

    def parse_summation(self) -> Expr:
        begin = self.expect(lx.SUM, '∑').span
        self.expect(lx.UNDERSCORE, '_')
        index = self._script()
        upper = None
        if self.at(lx.CARET):
            self.advance()
            upper = self._script()
        body = self.parse_product()
        return Summation(index, upper, body, self.span_from(begin))


def parse(text: str, notation: str = AUTO) -> VariantAst:
    """
    Parse one variant definition.

    Args:
        text: definition text; ``#`` comment lines and leading ``⊕N: text``
            annotation lines are allowed
        notation: 'auto', 'longhand' or 'shorthand'

    Returns:
        VariantAst: the parse tree

    Raises:
        T3coSyntaxError: On any syntax error, with span and expected tokens
        MixedNotationError: If the text mixes field labels and bars
        MissingFieldError: If there are not exactly five fields
    """
    if notation not in (AUTO, LONGHAND, SHORTHAND):
        raise ValueError(f"Unknown notation: {notation}")
    body, annotations = _split_preamble(text)
    tokens = lx.tokenize(body)
    if tokens[0].kind == lx.EOF:
        raise T3coSyntaxError("Empty definition", tokens[0].span, {'⟨'})
    return Parser(tokens, notation).parse_variant(annotations)
