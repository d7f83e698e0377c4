"""Recursive-descent parser for the ASCII formula syntax.

Grammar, loosest binding first::

    formula := implies
    implies := or ("->" implies)?
    or      := and (("\\/" | "|") and)*
    and     := until (("/\\" | "&") until)*
    until   := unary (("U" | "R") until)?
    unary   := ("!" | "~" | "X" | "F" | "G" | "<>" | "[]") unary
             | IDENT "." unary
             | atom
    atom    := "true" | "false" | IDENT | IDENT CMP NUMBER | "(" formula ")"
    CMP     := "<=" | "<" | "=" | ">" | ">="

The MTL dialect (:func:`parse_mtl`) drops freeze binders and constraints and
lets ``U``, ``R``, ``F`` and ``G`` carry an interval ``[l,u]`` where ``u`` may
be ``inf``. The usual Unicode symbols (⊤ ⊥ ¬ ∧ ∨ → ○ ◇ □ ≤ ≥ ∞) are accepted as
aliases.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from . import ast

KEYWORDS = {"true", "false", "X", "F", "G", "U", "R"}

_TOKEN_SPEC = [
    ("WS", r"[ \t\r\n]+"),
    ("NUMBER", r"(?:\d+(?:\.\d+)?|\.\d+)(?:[eE][+-]?\d+)?"),
    ("IDENT", r"[A-Za-z_][A-Za-z0-9_]*"),
    ("IMPLIES", r"->|→"),
    ("NEGNUM", r"-\s*(?:\d|\.\d)"),
    ("ALWAYS", r"\[\]|□"),
    ("EVENTUALLY", r"<>|◇"),
    ("CMP", r"<=|>=|<|>|=|≤|≥"),
    ("AND", r"/\\|&|∧"),
    ("OR", r"\\/|\||∨"),
    ("NOT", r"!|~|¬"),
    ("NEXT", r"○"),
    ("INFSYM", r"∞"),
    ("TOPSYM", r"⊤"),
    ("BOTSYM", r"⊥"),
    ("LPAREN", r"\("),
    ("RPAREN", r"\)"),
    ("LBRACK", r"\["),
    ("RBRACK", r"\]"),
    ("COMMA", r","),
    ("DOT", r"\."),
    ("PLUS", r"\+"),
]
_TOKEN_RE = re.compile("|".join(f"(?P<{name}>{pat})" for name, pat in _TOKEN_SPEC))
_CONST_SYMBOLS = {"TOPSYM": "true", "BOTSYM": "false"}
_CMP_NORMAL = {"≤": "<=", "≥": ">="}


class ParseError(ValueError):
    """Syntax error with a 1-based position and the set of acceptable tokens."""

    def __init__(self, message, line, column, expected=()):
        self.line = line
        self.column = column
        self.expected = frozenset(expected)
        detail = f"{message} at line {line}, column {column}"
        if self.expected:
            detail += f" (expected one of: {', '.join(sorted(self.expected))})"
        super().__init__(detail)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    offset: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            line, col = _position(text, pos)
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        if kind != "WS":
            tok_text = m.group()
            if kind == "IDENT" and tok_text in KEYWORDS:
                kind = tok_text
            elif kind in _CONST_SYMBOLS:
                kind = _CONST_SYMBOLS[kind]
            tokens.append(Token(kind, tok_text, pos))
        pos = m.end()
    tokens.append(Token("EOF", "", len(text)))
    return tokens


def _position(text, offset):
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


_UNARY_START = {"NOT", "X", "NEXT", "F", "EVENTUALLY", "G", "ALWAYS"}
_ATOM_START = {"true", "false", "IDENT", "LPAREN"}


class _Parser:
    def __init__(self, text, mtl=False):
        self.text = text
        self.mtl = mtl
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def tok(self):
        return self.tokens[self.pos]

    def peek(self, k=1):
        return self.tokens[min(self.pos + k, len(self.tokens) - 1)]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, message, expected=(), tok=None):
        tok = tok or self.tok
        line, col = _position(self.text, tok.offset)
        return ParseError(message, line, col, expected)

    def expect(self, kind, label=None):
        if self.tok.kind != kind:
            found = self.tok.text or "end of input"
            raise self.error(f"unexpected {found!r}", {label or kind})
        return self.advance()

    # grammar rules

    def parse(self):
        node = self.implies()
        if self.tok.kind != "EOF":
            raise self.error(
                f"unexpected {self.tok.text!r}", {"->", "\\/", "/\\", "U", "R", "end of input"}
            )
        return node

    def implies(self):
        left = self.disjunction()
        if self.tok.kind == "IMPLIES":
            self.advance()
            return ast.Implies(left, self.implies())
        return left

    def disjunction(self):
        node = self.conjunction()
        while self.tok.kind == "OR":
            self.advance()
            node = ast.Or(node, self.conjunction())
        return node

    def conjunction(self):
        node = self.until()
        while self.tok.kind == "AND":
            self.advance()
            node = ast.And(node, self.until())
        return node

    def until(self):
        left = self.unary()
        if self.tok.kind in ("U", "R"):
            op = self.advance().kind
            interval = self.interval()
            right = self.until()
            if self.mtl:
                cls = ast.UntilI if op == "U" else ast.ReleaseI
                return cls(left, right, *interval)
            return (ast.Until if op == "U" else ast.Release)(left, right)
        return left

    def unary(self):
        kind = self.tok.kind
        if kind == "NOT":
            self.advance()
            return ast.Not(self.unary())
        if kind in ("X", "NEXT"):
            self.advance()
            return ast.Next(self.unary())
        if kind in ("F", "EVENTUALLY", "G", "ALWAYS"):
            self.advance()
            interval = self.interval()
            child = self.unary()
            eventually = kind in ("F", "EVENTUALLY")
            if self.mtl:
                return (ast.EventuallyI if eventually else ast.AlwaysI)(child, *interval)
            return (ast.Eventually if eventually else ast.Always)(child)
        if kind == "IDENT" and self.peek().kind == "DOT":
            if self.mtl:
                raise self.error("freeze quantifiers are not part of MTL")
            var = self.advance().text
            self.advance()
            return ast.Freeze(var, self.unary())
        return self.atom()

    def interval(self):
        if not self.mtl or self.tok.kind != "LBRACK":
            return ()
        start = self.advance()
        lower = self.number()
        self.expect("COMMA", ",")
        if self.tok.kind == "INFSYM" or (self.tok.kind == "IDENT" and self.tok.text == "inf"):
            self.advance()
            upper = math.inf
        else:
            upper = self.number()
        self.expect("RBRACK", "]")
        if lower > upper:
            raise self.error(f"empty interval [{lower}, {upper}]", tok=start)
        return (lower, upper)

    def number(self):
        if self.tok.kind == "NEGNUM":
            raise self.error("negative bounds are not allowed")
        return float(self.expect("NUMBER", "NUMBER").text)

    def atom(self):
        tok = self.tok
        if tok.kind == "true":
            self.advance()
            return ast.TrueConst()
        if tok.kind == "false":
            self.advance()
            return ast.false()
        if tok.kind == "LPAREN":
            self.advance()
            node = self.implies()
            self.expect("RPAREN", ")")
            return node
        if tok.kind == "IDENT":
            self.advance()
            nxt = self.tok
            if nxt.kind == "PLUS":
                raise self.error("two-variable (x + c ~ y + d) constraints are not supported")
            if nxt.kind == "CMP":
                if self.mtl:
                    raise self.error("time constraints are not part of MTL")
                self.advance()
                if self.tok.kind == "IDENT":
                    raise self.error("two-variable (x ~ y) constraints are not supported")
                if self.tok.kind == "NEGNUM":
                    raise self.error("negative constraint bound")
                bound = float(self.expect("NUMBER", "NUMBER").text)
                relation = _CMP_NORMAL.get(nxt.text, nxt.text)
                return ast.Constraint(tok.text, relation, bound)
            return ast.Prop(tok.text)
        found = tok.text or "end of input"
        raise self.error(
            f"unexpected {found!r}",
            {"true", "false", "IDENT", "(", "!", "X", "F", "G", "<>", "[]"},
        )


def parse(text: str) -> ast.Formula:
    """Parse a TPTL formula.

    >>> str(parse("G x.(F (a /\\\\ x <= 1))"))
    'G x.(F (a /\\\\ x <= 1))'
    """
    return _Parser(text).parse()


def parse_mtl(text: str) -> ast.Formula:
    """Parse a bounded MTL formula; untimed operators get the interval [0, inf]."""
    return _Parser(text, mtl=True).parse()
