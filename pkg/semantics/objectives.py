#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Objective and constraint statements of the ε field.

The grammar accepts arbitrary expressions; ``classify_objective`` maps the
statement forms used by the variant tables onto a closed set of typed
statements and rejects everything else.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Optional, Tuple

from core.errors import UnsupportedObjectiveError
from core.costs import EDGES, NODES
from grammar.ast_nodes import (
    BinOp, Call, Card, Chain, Compl, Expr, Extremum, ForAll, Name, Neg, Num,
    Optimize, Paren, SetBuilder, SetLit, SetRange, Summation, Wildcard,
)
from grammar.render import render_expr

MIN = 'min'
MAX = 'max'

WALK_SYMBOLS = ('S', '𝒮', 'S_V', 'S_E')
VISITED_SET = ('V_S',)
EPSILON_SYMBOLS = ('ε', 'epsilon')


# -- term atoms --------------------------------------------------------------

@dataclass(frozen=True)
class TotalCost:
    cost: str

    def __str__(self):
        return f"{self.cost}(S)"


@dataclass(frozen=True)
class ComplementCost:
    cost: str

    def __str__(self):
        return f"{self.cost}̄(S)"


@dataclass(frozen=True)
class CardinalityVisited:
    def __str__(self):
        return "|V_S|"


@dataclass(frozen=True)
class PriceShareSum:
    price: str
    share: str
    products: str = 'm'

    def __str__(self):
        return f"∑ {self.price}·{self.share}"


def _atom_key(atom) -> str:
    return f"{type(atom).__name__}:{atom}"


@dataclass(frozen=True)
class LinearTerm:
    """Sum of coefficient * atom plus a constant; parts are kept in canonical order."""
    parts: Tuple[Tuple[Fraction, object], ...] = ()
    constant: Fraction = Fraction(0)

    @classmethod
    def of(cls, parts: Iterable[Tuple[Fraction, object]], constant=Fraction(0)) -> 'LinearTerm':
        merged: Dict[str, Tuple[Fraction, object]] = {}
        for coef, atom in parts:
            key = _atom_key(atom)
            if key in merged:
                coef = merged[key][0] + coef
            merged[key] = (coef, atom)
        ordered = tuple(merged[key] for key in sorted(merged) if merged[key][0] != 0)
        return cls(ordered, Fraction(constant))

    def atoms(self):
        return [atom for _, atom in self.parts]

    def cost_refs(self) -> Tuple[str, ...]:
        refs = []
        for atom in self.atoms():
            if isinstance(atom, (TotalCost, ComplementCost)):
                refs.append(atom.cost)
            elif isinstance(atom, PriceShareSum):
                refs.extend((atom.price, atom.share))
        return tuple(refs)

    def __add__(self, other: 'LinearTerm') -> 'LinearTerm':
        return LinearTerm.of(self.parts + other.parts, self.constant + other.constant)

    def scaled(self, factor: Fraction) -> 'LinearTerm':
        return LinearTerm.of(((coef * factor, atom) for coef, atom in self.parts), self.constant * factor)


@dataclass(frozen=True)
class BoundRef:
    """Right-hand side of a bound: an instance parameter or a literal."""
    symbol: Optional[str] = None
    constant: Optional[Fraction] = None

    def __str__(self):
        return self.symbol if self.symbol is not None else str(self.constant)


# -- statements --------------------------------------------------------------

@dataclass(frozen=True)
class Statement:
    text: str = field(default='', compare=False, repr=False)

    sense = None

    @property
    def is_constraint(self) -> bool:
        return self.sense is None

    def cost_refs(self) -> Tuple[str, ...]:
        return ()

    def label(self) -> str:
        return self.text or type(self).__name__


@dataclass(frozen=True)
class Minimize(Statement):
    term: LinearTerm = LinearTerm()
    sense = MIN

    def cost_refs(self):
        return self.term.cost_refs()


@dataclass(frozen=True)
class Maximize(Statement):
    term: LinearTerm = LinearTerm()
    sense = MAX

    def cost_refs(self):
        return self.term.cost_refs()


@dataclass(frozen=True)
class UpperBound(Statement):
    term: LinearTerm = LinearTerm()
    bound: BoundRef = BoundRef()

    def cost_refs(self):
        return self.term.cost_refs()


@dataclass(frozen=True)
class LowerBound(Statement):
    term: LinearTerm = LinearTerm()
    bound: BoundRef = BoundRef()

    def cost_refs(self):
        return self.term.cost_refs()


@dataclass(frozen=True)
class MinMaxEdge(Statement):
    cost: str = 'c'
    sense = MIN

    def cost_refs(self):
        return (self.cost,)


@dataclass(frozen=True)
class MaxMinEdge(Statement):
    cost: str = 'c'
    sense = MAX

    def cost_refs(self):
        return (self.cost,)


@dataclass(frozen=True)
class WindowBound:
    """
    One side of a time window evaluated at the i-th visited node.

    The value is ``(scale + eps_scale·ε) · symbol(v_i) + offset − handling(v_i)``;
    a scalar parameter (``per_node`` False) ignores the node.
    """
    symbol: str
    per_node: bool = True
    scale: Fraction = Fraction(1)
    eps_scale: Fraction = Fraction(0)
    offset: Fraction = Fraction(0)
    handling: Optional[str] = None

    def __str__(self):
        text = f"{self.symbol}(v_i)" if self.per_node else self.symbol
        if self.scale != 1 or self.eps_scale:
            factor = str(self.scale)
            if self.eps_scale:
                factor = f"({factor} + {self.eps_scale}ε)"
            text = f"{factor}·{text}"
        if self.offset:
            text += f" + {self.offset}"
        if self.handling:
            text += f" − {self.handling}(v_i)"
        return text


@dataclass(frozen=True)
class TimeWindow(Statement):
    """
    Arrival-time constraint for every visited position.

    The arrival time at position i is the travel cost of the prefix before
    i, plus the waiting up to and including i, plus the handling times of the
    nodes visited before i.
    """
    travel: Tuple[str, ...] = ()
    waiting: Optional[str] = None
    handling: Optional[str] = None
    release: Optional[WindowBound] = None
    deadline: Optional[WindowBound] = None
    release_strict: bool = False
    deadline_strict: bool = False

    def cost_refs(self):
        refs = list(self.travel)
        for name in (self.waiting, self.handling):
            if name:
                refs.append(name)
        for bound in (self.release, self.deadline):
            if bound is not None and bound.handling:
                refs.append(bound.handling)
        return tuple(refs)


@dataclass(frozen=True)
class MaxLateness(Statement):
    travel: Tuple[str, ...] = ()
    handling: Optional[str] = None
    deadline: str = 'd'
    sense = MIN

    def cost_refs(self):
        return self.travel + ((self.handling,) if self.handling else ())


DEMAND = 'demand'
AVAILABILITY = 'availability'


@dataclass(frozen=True)
class PurchaseDemand(Statement):
    """
    Purchase constraint per product: total share meets the demand, or the
    share bought at a node stays within its availability.
    """
    kind: str = DEMAND
    share: str = 'share'
    bound: BoundRef = BoundRef()
    products: str = 'm'

    def cost_refs(self):
        refs = [self.share]
        if self.kind == AVAILABILITY and self.bound.symbol:
            refs.append(self.bound.symbol)
        return tuple(refs)


@dataclass(frozen=True)
class TemplateObjective(Statement):
    """``min *`` in a template definition"""
    template_sense: Optional[str] = None


OPTIMIZATION_TYPES = (Minimize, Maximize, MinMaxEdge, MaxMinEdge, MaxLateness)
CONSTRAINT_TYPES = (UpperBound, LowerBound, TimeWindow, PurchaseDemand)


# -- classification ----------------------------------------------------------

def _unsupported(expr: Expr, message: str = "Unsupported objective form"):
    raise UnsupportedObjectiveError(message, render_expr(expr))


def _name(expr: Expr) -> Optional[str]:
    return expr.text if isinstance(expr, Name) else None


def _walk_arg(args) -> bool:
    return len(args) == 1 and _name(args[0]) in WALK_SYMBOLS


def _number(expr: Expr) -> Optional[Fraction]:
    if isinstance(expr, Num) and expr.text != '∞':
        return Fraction(expr.text)
    if isinstance(expr, Neg):
        inner = _number(expr.operand)
        return -inner if inner is not None else None
    if isinstance(expr, Paren) and len(expr.items) == 1:
        return _number(expr.items[0])
    return None


def _price_share(expr: Summation, root: Expr) -> PriceShareSum:
    products = render_expr(expr.upper) if expr.upper is not None else 'm'
    inner = expr.body
    if not isinstance(inner, Summation):
        _unsupported(root)
    body = inner.body
    if not (isinstance(body, BinOp) and body.op == '·'):
        _unsupported(root)
    names = []
    for side in (body.left, body.right):
        if not (isinstance(side, Call) and isinstance(side.func, Name)):
            _unsupported(root)
        names.append(side.func.text)
    price, share = names
    if share.split('_', 1)[0] != 'share':
        price, share = share, price
    return PriceShareSum(price, share, products)


def classify_term(expr: Expr, root: Optional[Expr] = None) -> LinearTerm:
    """
    Linear combination of walk aggregates.

    Raises:
        UnsupportedObjectiveError: For anything outside the aggregate forms
    """
    root = root if root is not None else expr
    constant = _number(expr)
    if constant is not None:
        return LinearTerm.of((), constant)
    if isinstance(expr, BinOp):
        if expr.op == '+':
            return classify_term(expr.left, root) + classify_term(expr.right, root)
        if expr.op == '−':
            return classify_term(expr.left, root) + classify_term(expr.right, root).scaled(Fraction(-1))
        if expr.op == '·':
            left, right = _number(expr.left), _number(expr.right)
            if left is not None:
                return classify_term(expr.right, root).scaled(left)
            if right is not None:
                return classify_term(expr.left, root).scaled(right)
        _unsupported(root)
    if isinstance(expr, Neg):
        return classify_term(expr.operand, root).scaled(Fraction(-1))
    if isinstance(expr, Paren) and len(expr.items) == 1:
        return classify_term(expr.items[0], root)
    if isinstance(expr, Call):
        if isinstance(expr.func, Name) and _walk_arg(expr.args):
            return LinearTerm.of(((Fraction(1), TotalCost(expr.func.text)),))
        if isinstance(expr.func, Compl) and _walk_arg(expr.args):
            return LinearTerm.of(((Fraction(1), ComplementCost(expr.func.name)),))
        if isinstance(expr.func, Name) and expr.func.text == 'card' and len(expr.args) == 1:
            return classify_term(Card(expr.args[0]), root)
        _unsupported(root)
    if isinstance(expr, Compl):
        return LinearTerm.of(((Fraction(1), ComplementCost(expr.name)),))
    if isinstance(expr, Card):
        if _name(expr.operand) in VISITED_SET:
            return LinearTerm.of(((Fraction(1), CardinalityVisited()),))
        _unsupported(root)
    if isinstance(expr, Summation):
        return LinearTerm.of(((Fraction(1), _price_share(expr, root)),))
    if isinstance(expr, Name) and expr.text not in WALK_SYMBOLS and ' ' not in expr.text:
        return LinearTerm.of(((Fraction(1), TotalCost(expr.text)),))
    _unsupported(root)


def _bound_ref(expr: Expr) -> Optional[BoundRef]:
    number = _number(expr)
    if number is not None:
        return BoundRef(constant=number)
    if isinstance(expr, Name) and expr.text not in WALK_SYMBOLS:
        return BoundRef(symbol=expr.text)
    return None


def _looks_like_bound(expr: Expr, costs: Dict[str, object]) -> bool:
    ref = _bound_ref(expr)
    if ref is None:
        return False
    return ref.symbol is None or ref.symbol not in costs


# time windows

def _subscript_of(name: str, var: str) -> Optional[str]:
    """Relation of a walk subscript to the quantified index: '<', '≤' or '='."""
    if '_' not in name:
        return None
    base, sub = name.split('_', 1)
    if base != 'S':
        return None
    if sub.startswith('{') and sub.endswith('}'):
        sub = sub[1:-1]
    sub = sub.replace('<=', '≤').replace(' ', '')
    if sub == var:
        return '='
    if sub in (f'<{var}', f'≤{var}'):
        return sub[0]
    return None


def _node_arg(args, var: str) -> bool:
    if len(args) != 1 or not isinstance(args[0], Name):
        return False
    text = args[0].text
    return text in (f'v_{var}', f'v_{{{var}}}') or _subscript_of(text, var) == '='


def _arrival_parts(expr: Expr, var: str, costs: Dict[str, object], root: Expr):
    """Collect (travel, waiting, handling) names from an arrival-time sum; None if expr is not one."""
    travel, waiting, handling = [], [], []
    stack = [expr]
    while stack:
        node = stack.pop()
        if isinstance(node, BinOp) and node.op == '+':
            stack.extend((node.right, node.left))
            continue
        if isinstance(node, Call) and isinstance(node.func, Name) and len(node.args) == 1 \
                and isinstance(node.args[0], Name):
            relation = _subscript_of(node.args[0].text, var)
            name = node.func.text
            if relation == '<':
                signature = costs.get(name)
                domain = getattr(signature, 'domain', EDGES)
                (handling if domain == NODES else travel).append(name)
                continue
            if relation == '≤':
                waiting.append(name)
                continue
        return None
    if not travel and not waiting and not handling:
        return None
    if len(waiting) > 1 or len(handling) > 1:
        _unsupported(root, "Arrival time may use one waiting and one handling function")
    return tuple(travel), (waiting[0] if waiting else None), (handling[0] if handling else None)


def _window_bound(expr: Expr, var: str, root: Expr) -> WindowBound:
    scale, eps_scale, offset, handling = Fraction(1), Fraction(0), Fraction(0), None
    core = expr
    if isinstance(core, BinOp) and core.op == '−':
        right = core.right
        if isinstance(right, Call) and isinstance(right.func, Name) and _node_arg(right.args, var):
            handling = right.func.text
            core = core.left
    if isinstance(core, BinOp) and core.op == '+':
        number = _number(core.right)
        if number is None:
            _unsupported(root)
        offset = number
        core = core.left
    if isinstance(core, BinOp) and core.op == '·':
        scale, eps_scale = _linear_epsilon(core.left, root)
        core = core.right
    if isinstance(core, Call) and isinstance(core.func, Name) and _node_arg(core.args, var):
        return WindowBound(core.func.text, True, scale, eps_scale, offset, handling)
    if isinstance(core, Name) and core.text not in WALK_SYMBOLS:
        return WindowBound(core.text, False, scale, eps_scale, offset, handling)
    _unsupported(root)


def _linear_epsilon(expr: Expr, root: Expr) -> Tuple[Fraction, Fraction]:
    """Constant and ε coefficient of a factor such as (1 + 2ε)."""
    number = _number(expr)
    if number is not None:
        return number, Fraction(0)
    if isinstance(expr, Paren) and len(expr.items) == 1:
        return _linear_epsilon(expr.items[0], root)
    if isinstance(expr, Name):
        text = expr.text
        if text in EPSILON_SYMBOLS:
            return Fraction(0), Fraction(1)
        for symbol in EPSILON_SYMBOLS:
            if text.endswith(symbol) and text[:-len(symbol)].isdigit():
                return Fraction(0), Fraction(text[:-len(symbol)])
    if isinstance(expr, BinOp) and expr.op in ('+', '−'):
        left = _linear_epsilon(expr.left, root)
        right = _linear_epsilon(expr.right, root)
        sign = 1 if expr.op == '+' else -1
        return left[0] + sign * right[0], left[1] + sign * right[1]
    if isinstance(expr, BinOp) and expr.op == '·':
        number = _number(expr.left)
        if number is not None and _name(expr.right) in EPSILON_SYMBOLS:
            return Fraction(0), number
    _unsupported(root)


def _time_window(quantified: ForAll, costs, root: Expr) -> TimeWindow:
    body = quantified.body
    if not isinstance(body, Chain) or any(rel not in ('≤', '<') for rel in body.relations):
        _unsupported(root)
    operands = body.operands
    arrival_at = None
    for index, operand in enumerate(operands):
        parts = _arrival_parts(operand, quantified.var, costs, root)
        if parts is not None:
            arrival_at = index
            travel, waiting, handling = parts
            break
    if arrival_at is None or len(operands) > 3:
        _unsupported(root)
    release = deadline = None
    release_strict = deadline_strict = False
    if arrival_at > 0:
        if arrival_at != 1:
            _unsupported(root)
        release = _window_bound(operands[0], quantified.var, root)
        release_strict = body.relations[0] == '<'
    if arrival_at < len(operands) - 1:
        if arrival_at + 2 != len(operands):
            _unsupported(root)
        deadline = _window_bound(operands[arrival_at + 1], quantified.var, root)
        deadline_strict = body.relations[arrival_at] == '<'
    return TimeWindow(render_expr(root), travel, waiting, handling, release, deadline,
                      release_strict, deadline_strict)


def _purchase(quantified: ForAll, root: Expr) -> PurchaseDemand:
    domain = quantified.domain
    products = render_expr(domain.last) if isinstance(domain, SetRange) else 'm'
    body = quantified.body
    text = render_expr(root)
    if isinstance(body, ForAll) and isinstance(body.body, Chain):
        chain = body.body
        if chain.relations == ('≤',) and all(isinstance(op, Call) for op in chain.operands):
            share, avail = (op.func.text for op in chain.operands)
            return PurchaseDemand(text, AVAILABILITY, share.split('_', 1)[0],
                                  BoundRef(symbol=avail.split('_', 1)[0]), products)
    if isinstance(body, Chain) and body.relations in (('≥',), ('>',)):
        left, right = body.operands
        if isinstance(left, Call) and isinstance(left.func, Name) and _walk_arg(left.args):
            ref = _bound_ref(right)
            if ref is not None:
                if ref.symbol is not None:
                    ref = BoundRef(symbol=ref.symbol.split('_', 1)[0])
                return PurchaseDemand(text, DEMAND, left.func.text.split('_', 1)[0], ref, products)
    _unsupported(root)


def _mentions_share(expr: Expr) -> bool:
    return 'share' in render_expr(expr)


def _edge_aggregate(expr: Extremum) -> Optional[str]:
    """Cost name of ``{c(e) : e ∈ E_S}`` under an extremum."""
    operand = expr.operand
    if expr.index is None and isinstance(operand, SetBuilder):
        element = operand.element
        condition = operand.condition
        if (isinstance(element, Call) and isinstance(element.func, Name) and len(element.args) == 1
                and isinstance(condition, Chain) and condition.relations == ('∈',)
                and _name(condition.operands[1]) == 'E_S'):
            return element.func.text
    return None


def _lateness(expr: Extremum, costs, root: Expr) -> Optional[MaxLateness]:
    inner = expr.operand
    if not (isinstance(inner, Extremum) and inner.op == MAX and isinstance(inner.operand, SetLit)):
        return None
    items = inner.operand.items
    if len(items) != 2 or _number(items[0]) != 0:
        return None
    difference = items[1]
    if not (isinstance(difference, BinOp) and difference.op == '−'):
        return None
    parts = _arrival_parts(difference.left, expr.index, costs, root)
    target = difference.right
    if parts is None or not (isinstance(target, Call) and isinstance(target.func, Name)):
        return None
    travel, waiting, handling = parts
    if waiting is not None:
        return None
    return MaxLateness(render_expr(root), travel, handling, target.func.text)


def classify_objective(expr: Expr, costs: Optional[Dict[str, object]] = None):
    """
    Classify one ε entry into a statement.

    Args:
        expr: objective expression tree
        costs: cost signatures by name, used to tell edge travel times from
            node handling times in arrival-time sums

    Returns:
        Statement: typed statement

    Raises:
        UnsupportedObjectiveError: For forms outside the statement catalog
    """
    costs = costs or {}
    text = render_expr(expr)
    if isinstance(expr, Wildcard):
        return TemplateObjective(text)
    if isinstance(expr, Optimize):
        operand = expr.operand
        if isinstance(operand, Wildcard):
            return TemplateObjective(text, expr.sense)
        if isinstance(operand, Extremum):
            edge_cost = _edge_aggregate(operand)
            if edge_cost is not None:
                if expr.sense == MIN and operand.op == MAX:
                    return MinMaxEdge(text, edge_cost)
                if expr.sense == MAX and operand.op == MIN:
                    return MaxMinEdge(text, edge_cost)
            if expr.sense == MIN and operand.op == MAX and operand.index:
                lateness = _lateness(operand, costs, expr)
                if lateness is not None:
                    return lateness
            _unsupported(expr)
        term = classify_term(operand, expr)
        return Minimize(text, term) if expr.sense == MIN else Maximize(text, term)
    if isinstance(expr, Chain) and len(expr.operands) == 2 and expr.relations[0] in ('≤', '<', '≥', '>'):
        left, right = expr.operands
        relation = expr.relations[0]
        if _looks_like_bound(right, costs):
            term, bound = classify_term(left, expr), _bound_ref(right)
        elif _looks_like_bound(left, costs):
            term, bound = classify_term(right, expr), _bound_ref(left)
            relation = {'≤': '≥', '<': '>', '≥': '≤', '>': '<'}[relation]
        else:
            _unsupported(expr)
        if relation in ('≤', '<'):
            return UpperBound(text, term, bound)
        return LowerBound(text, term, bound)
    if isinstance(expr, ForAll):
        if _mentions_share(expr):
            return _purchase(expr, expr)
        return _time_window(expr, costs, expr)
    _unsupported(expr)
