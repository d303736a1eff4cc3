#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Tokenizer for variant definitions.

Unicode tokens and their ASCII aliases map onto the same token kinds:
``<``/``>`` become angle brackets only as the first and last token of a
definition, ``->`` is ``↦`` and ``<=``/``>=`` are ``≤``/``≥``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

from core.errors import T3coSyntaxError
from grammar.ast_nodes import SourceSpan

LANGLE = 'LANGLE'
RANGLE = 'RANGLE'
BAR = 'BAR'
PIPE = 'PIPE'
SEMI = 'SEMI'
COLON = 'COLON'
COMMA = 'COMMA'
LPAREN = 'LPAREN'
RPAREN = 'RPAREN'
LBRACE = 'LBRACE'
RBRACE = 'RBRACE'
MAPSTO = 'MAPSTO'
REL = 'REL'
PLUS = 'PLUS'
MINUS = 'MINUS'
TIMES = 'TIMES'
STAR = 'STAR'
SLASH = 'SLASH'
CROSS = 'CROSS'
NUMBER = 'NUMBER'
IDENT = 'IDENT'
COMPL = 'COMPL'
TILDE = 'TILDE'
INF = 'INF'
ELLIPSIS = 'ELLIPSIS'
FORALL = 'FORALL'
SUM = 'SUM'
UNDERSCORE = 'UNDERSCORE'
CARET = 'CARET'
OPLUS = 'OPLUS'
EOF = 'EOF'

COMBINING_MACRON = '̄'

_SINGLE = {
    '⟨': LANGLE, '〈': LANGLE, '⟩': RANGLE, '〉': RANGLE,
    '∣': BAR, '|': PIPE,
    ';': SEMI, ':': COLON, ',': COMMA,
    '(': LPAREN, ')': RPAREN, '{': LBRACE, '}': RBRACE,
    '↦': MAPSTO, '→': MAPSTO,
    '+': PLUS, '−': MINUS, '-': MINUS,
    '·': TIMES, '⋅': TIMES, '*': STAR, '/': SLASH, '×': CROSS,
    '∞': INF, '…': ELLIPSIS, '∀': FORALL, '∑': SUM, '_': UNDERSCORE, '^': CARET,
    '⊕': OPLUS, '~': TILDE,
}

_RELATIONS = {
    '=': '=', '≤': '≤', '<': '<', '≥': '≥', '>': '>', '∈': '∈',
    '<=': '≤', '>=': '≥', '≦': '≤', '≧': '≥',
}

KEYWORD_RELATIONS = {'in': '∈'}


@dataclass(frozen=True)
class Token:
    kind: str
    value: str
    span: SourceSpan


class Lexer:
    """Turns definition text into a token list ending with an EOF token."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.line = 1
        self.line_start = 0

    def _span(self, begin: int) -> SourceSpan:
        line, column = self._line_column(begin)
        return SourceSpan(begin, self.pos, line, column)

    def _line_column(self, offset: int):
        line = self.text.count('\n', 0, offset) + 1
        column = offset - (self.text.rfind('\n', 0, offset) + 1) + 1
        return line, column

    def _error(self, message: str, begin: int, expected=()):
        line, column = self._line_column(begin)
        raise T3coSyntaxError(message, SourceSpan(begin, min(begin + 1, len(self.text)), line, column), expected)

    def _peek(self, offset: int = 0) -> str:
        index = self.pos + offset
        return self.text[index] if index < len(self.text) else ''

    def tokenize(self) -> List[Token]:
        tokens: List[Token] = []
        while self.pos < len(self.text):
            char = self.text[self.pos]
            if char.isspace():
                self.pos += 1
                continue
            begin = self.pos
            two = self.text[self.pos:self.pos + 2]
            three = self.text[self.pos:self.pos + 3]
            if three == '...':
                self.pos += 3
                tokens.append(Token(ELLIPSIS, '…', self._span(begin)))
            elif three == '|->':
                self.pos += 3
                tokens.append(Token(MAPSTO, '↦', self._span(begin)))
            elif two == '->':
                self.pos += 2
                tokens.append(Token(MAPSTO, '↦', self._span(begin)))
            elif two in _RELATIONS:
                self.pos += 2
                tokens.append(Token(REL, _RELATIONS[two], self._span(begin)))
            elif char in _RELATIONS:
                self.pos += 1
                tokens.append(Token(REL, _RELATIONS[char], self._span(begin)))
            elif char.isdigit():
                tokens.append(self._number())
            elif char.isalpha():
                tokens.append(self._identifier())
            elif char in _SINGLE:
                self.pos += 1
                tokens.append(Token(_SINGLE[char], char if _SINGLE[char] != MINUS else '−', self._span(begin)))
            else:
                self._error(f"Unexpected character {char!r}", begin)
        tokens.append(Token(EOF, '', SourceSpan(len(self.text), len(self.text), *self._line_column(len(self.text)))))
        return tokens

    def _number(self) -> Token:
        begin = self.pos
        while self._peek().isdigit():
            self.pos += 1
        if self._peek() == '.' and self._peek(1).isdigit():
            self.pos += 1
            while self._peek().isdigit():
                self.pos += 1
        return Token(NUMBER, self.text[begin:self.pos], self._span(begin))

    def _identifier(self) -> Token:
        begin = self.pos
        while True:
            char = self._peek()
            if char.isalnum() or char == "'":
                self.pos += 1
            elif char == '-' and self._peek(1).isalpha() and self.pos > begin:
                # hyphenated words such as k-partition or α-triangle
                self.pos += 1
            else:
                break
        if self._peek() == '_' and (self._peek(1).isalnum() or self._peek(1) == '{'):
            self.pos += 1
            if self._peek() == '{':
                self._skip_braces()
            else:
                while self._peek().isalnum():
                    self.pos += 1
        word = self.text[begin:self.pos]
        if self._peek() == COMBINING_MACRON:
            self.pos += 1
            return Token(COMPL, word, self._span(begin))
        if word in KEYWORD_RELATIONS:
            return Token(REL, KEYWORD_RELATIONS[word], self._span(begin))
        if word == 'forall':
            return Token(FORALL, '∀', self._span(begin))
        if word == 'sum':
            return Token(SUM, '∑', self._span(begin))
        return Token(IDENT, word, self._span(begin))

    def _skip_braces(self):
        begin = self.pos
        depth = 0
        while self.pos < len(self.text):
            char = self.text[self.pos]
            self.pos += 1
            if char == '{':
                depth += 1
            elif char == '}':
                depth -= 1
                if depth == 0:
                    return
        self._error("Unbalanced subscript braces", begin, {'}'})


def _suffix_matches(tokens: List[Token]) -> bool:
    """Tokens after the closing bracket form a valid ⊕ marker (or nothing)."""
    kinds = [token.kind for token in tokens if token.kind != EOF]
    patterns = (
        [],
        [OPLUS], [OPLUS, NUMBER],
        [CARET, OPLUS], [CARET, OPLUS, NUMBER],
        [CARET, LBRACE, OPLUS, RBRACE], [CARET, LBRACE, OPLUS, NUMBER, RBRACE],
        [LPAREN, PLUS, RPAREN], [LPAREN, PLUS, NUMBER, RPAREN],
    )
    return kinds in [list(p) for p in patterns]


def tokenize(text: str) -> List[Token]:
    """
    Tokenize a definition and settle ASCII angle brackets.

    Raises:
        T3coSyntaxError: On characters outside the definition alphabet
    """
    tokens = Lexer(text).tokenize()
    if tokens and tokens[0].kind == REL and tokens[0].value == '<':
        tokens[0] = Token(LANGLE, '⟨', tokens[0].span)
    if not any(token.kind == RANGLE for token in tokens):
        for index in range(len(tokens) - 1, -1, -1):
            token = tokens[index]
            if token.kind == REL and token.value == '>' and _suffix_matches(tokens[index + 1:]):
                tokens[index] = Token(RANGLE, '⟩', token.span)
                break
    return tokens


def first_token(tokens: List[Token], kind: str) -> Optional[Token]:
    for token in tokens:
        if token.kind == kind:
            return token
    return None
