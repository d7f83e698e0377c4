"""Immutable syntax trees for TPTL and bounded MTL formulas.

Every node is a frozen dataclass, so trees hash, compare structurally and
can be shared freely. ``str(node)`` renders the concrete ASCII syntax that
:func:`tptlmon.formula.parse` reads back.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from ..relations import RELATIONS

INF = math.inf


class Formula:
    """Base class of all formula nodes."""

    __slots__ = ()

    @property
    def children(self) -> tuple[Formula, ...]:
        return ()

    def walk(self) -> Iterator[Formula]:
        """Pre-order traversal of the tree (node before children, left first)."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def size(self) -> int:
        return sum(1 for _ in self.walk())

    def __str__(self) -> str:
        return to_text(self)


class _Unary(Formula):
    __slots__ = ()

    @property
    def children(self):
        return (self.child,)


class _Binary(Formula):
    __slots__ = ()

    @property
    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True, eq=True, repr=True)
class TrueConst(Formula):
    pass


@dataclass(frozen=True)
class Prop(Formula):
    name: str


@dataclass(frozen=True)
class Constraint(Formula):
    """``var relation bound``: elapsed time since ``var`` was frozen vs. ``bound``."""

    var: str
    relation: str
    bound: float

    def __post_init__(self):
        if self.relation not in RELATIONS:
            raise ValueError(f"unknown relation {self.relation!r}")
        if not self.bound >= 0:
            raise ValueError(f"constraint bound must be nonnegative, got {self.bound}")
        object.__setattr__(self, "bound", float(self.bound))


@dataclass(frozen=True)
class Not(_Unary):
    child: Formula


@dataclass(frozen=True)
class Next(_Unary):
    child: Formula


@dataclass(frozen=True)
class Eventually(_Unary):
    child: Formula


@dataclass(frozen=True)
class Always(_Unary):
    child: Formula


@dataclass(frozen=True)
class Freeze(_Unary):
    var: str
    child: Formula


@dataclass(frozen=True)
class And(_Binary):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(_Binary):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(_Binary):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Until(_Binary):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Release(_Binary):
    left: Formula
    right: Formula


def false() -> Formula:
    return Not(TrueConst())


# -- bounded MTL ------------------------------------------------------------


def _check_interval(lower, upper):
    if not (0 <= lower <= upper):
        raise ValueError(f"invalid interval [{lower}, {upper}]")


@dataclass(frozen=True)
class UntilI(_Binary):
    left: Formula
    right: Formula
    lower: float = 0.0
    upper: float = INF

    def __post_init__(self):
        _check_interval(self.lower, self.upper)


@dataclass(frozen=True)
class ReleaseI(_Binary):
    left: Formula
    right: Formula
    lower: float = 0.0
    upper: float = INF

    def __post_init__(self):
        _check_interval(self.lower, self.upper)


@dataclass(frozen=True)
class EventuallyI(_Unary):
    child: Formula
    lower: float = 0.0
    upper: float = INF

    def __post_init__(self):
        _check_interval(self.lower, self.upper)


@dataclass(frozen=True)
class AlwaysI(_Unary):
    child: Formula
    lower: float = 0.0
    upper: float = INF

    def __post_init__(self):
        _check_interval(self.lower, self.upper)


# -- pretty printing --------------------------------------------------------

BINARY_SYMBOLS = {
    And: "/\\",
    Or: "\\/",
    Implies: "->",
    Until: "U",
    Release: "R",
    UntilI: "U",
    ReleaseI: "R",
}
UNARY_SYMBOLS = {
    Not: "!",
    Next: "X ",
    Eventually: "F ",
    Always: "G ",
    EventuallyI: "F",
    AlwaysI: "G",
}
# left-nested chains of these print flat, matching the parser's left fold
_FLAT = (And, Or)


def format_number(value: float) -> str:
    if math.isinf(value):
        return "inf"
    if value.is_integer() and abs(value) < 1e16:
        return str(int(value))
    return repr(value)


def _interval(node) -> str:
    if node.lower == 0 and math.isinf(node.upper):
        return ""
    return f"[{format_number(node.lower)},{format_number(node.upper)}]"


def to_text(node: Formula, top: bool = True) -> str:
    """Render ``node`` in the concrete syntax; binary nodes are parenthesized
    except at the top level."""
    if isinstance(node, TrueConst):
        return "true"
    if isinstance(node, Not) and isinstance(node.child, TrueConst):
        return "false"
    if isinstance(node, Prop):
        return node.name
    if isinstance(node, Constraint):
        return f"{node.var} {node.relation} {format_number(node.bound)}"
    if isinstance(node, Freeze):
        return f"{node.var}.({to_text(node.child)})"
    if isinstance(node, (EventuallyI, AlwaysI)):
        sym = UNARY_SYMBOLS[type(node)]
        interval = _interval(node)
        return f"{sym}{interval} {to_text(node.child, top=False)}"
    if type(node) in UNARY_SYMBOLS:
        return UNARY_SYMBOLS[type(node)] + to_text(node.child, top=False)
    if type(node) in BINARY_SYMBOLS:
        sym = BINARY_SYMBOLS[type(node)]
        if isinstance(node, (UntilI, ReleaseI)):
            sym += _interval(node)
        if isinstance(node, _FLAT):
            parts = []
            cur = node
            while type(cur) is type(node):
                parts.append(cur.right)
                cur = cur.left
            parts.append(cur)
            parts.reverse()
        else:
            parts = [node.left, node.right]
        text = f" {sym} ".join(to_text(p, top=False) for p in parts)
        return text if top else f"({text})"
    raise TypeError(f"not a formula node: {node!r}")
