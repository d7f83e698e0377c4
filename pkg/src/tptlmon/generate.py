"""Seeded random formulas and traces for differential testing."""

from __future__ import annotations

import math
import random

from .formula import ast
from .trace import TimedStateSequence

PROPS = ("a", "b", "c")
VAR_NAMES = ("x", "y", "z")
BOUNDS = (0.0, 0.25, 0.5, 1.0, 1.5, 2.0, 3.0, 5.0)
RELATIONS = ("<=", "<", "=", ">", ">=")

_UNARY = (ast.Not, ast.Next, ast.Eventually, ast.Always)
_BINARY = (ast.And, ast.Or, ast.Implies, ast.Until, ast.Release)
_TEMPORAL = (ast.Next, ast.Eventually, ast.Always, ast.Until, ast.Release)


def temporal_depth(f: ast.Formula) -> int:
    own = 1 if isinstance(f, _TEMPORAL) else 0
    return own + max((temporal_depth(c) for c in f.children), default=0)


def random_formula(
    rng: random.Random,
    props=PROPS,
    max_depth: int = 5,
    max_temporal: int = 5,
    max_vars: int = 3,
    encapsulated: bool = True,
    freeze_prob: float = 0.2,
) -> ast.Formula:
    """A closed random formula with at most ``max_vars`` freeze binders.

    Binder names are drawn from a small pool, so disjoint binders often
    share a name. With ``encapsulated=False`` a constraint may mention any
    enclosing binder, not just the innermost one.
    """
    budget = [max_vars]

    def leaf(binders):
        roll = rng.random()
        if binders and roll < 0.4:
            var = binders[-1] if encapsulated else rng.choice(binders)
            return ast.Constraint(var, rng.choice(RELATIONS), rng.choice(BOUNDS))
        if roll < 0.5:
            return ast.TrueConst() if rng.random() < 0.5 else ast.false()
        return ast.Prop(rng.choice(props))

    def go(depth, temporal, binders):
        if depth == 0 or rng.random() < 0.2:
            return leaf(binders)
        if budget[0] > 0 and rng.random() < freeze_prob:
            free = [v for v in VAR_NAMES if v not in binders]
            if free:
                budget[0] -= 1
                var = rng.choice(free)
                return ast.Freeze(var, go(depth - 1, temporal, binders + (var,)))
        ops = list(_UNARY + _BINARY)
        if temporal == 0:
            ops = [op for op in ops if op not in _TEMPORAL]
        op = rng.choice(ops)
        t = temporal - 1 if op in _TEMPORAL else temporal
        if op in _UNARY:
            return op(go(depth - 1, t, binders))
        return op(go(depth - 1, t, binders), go(depth - 1, t, binders))

    return go(max_depth, max_temporal, ())


def random_mtl(rng: random.Random, props=PROPS, max_depth: int = 4) -> ast.Formula:
    """Random bounded-MTL formula; about a quarter of temporal operators are untimed."""

    def interval():
        if rng.random() < 0.25:
            return 0.0, math.inf
        lower = rng.choice(BOUNDS[:6])
        upper = math.inf if rng.random() < 0.2 else lower + rng.choice(BOUNDS)
        return lower, upper

    def go(depth):
        if depth == 0 or rng.random() < 0.2:
            roll = rng.random()
            if roll < 0.1:
                return ast.TrueConst()
            if roll < 0.15:
                return ast.false()
            return ast.Prop(rng.choice(props))
        kind = rng.randrange(9)
        if kind == 0:
            return ast.Not(go(depth - 1))
        if kind == 1:
            return ast.Next(go(depth - 1))
        if kind in (2, 3, 4):
            cls = (ast.And, ast.Or, ast.Implies)[kind - 2]
            return cls(go(depth - 1), go(depth - 1))
        if kind == 5:
            return ast.UntilI(go(depth - 1), go(depth - 1), *interval())
        if kind == 6:
            return ast.ReleaseI(go(depth - 1), go(depth - 1), *interval())
        if kind == 7:
            return ast.EventuallyI(go(depth - 1), *interval())
        return ast.AlwaysI(go(depth - 1), *interval())

    return go(max_depth)


def random_trace(
    rng: random.Random,
    max_length: int = 12,
    props=PROPS,
    steps=(0.0, 0.25, 0.5, 0.5, 1.0, 1.5),
) -> TimedStateSequence:
    """Short trace on a 0.25 s time grid so equality constraints can fire.

    Zero steps (repeated timestamps) are allowed.
    """
    length = rng.randint(1, max_length)
    times = [0.0]
    for _ in range(length - 1):
        times.append(times[-1] + rng.choice(steps))
    states = [frozenset(p for p in props if rng.random() < 0.5) for _ in range(length)]
    return TimedStateSequence(tuple(times), tuple(states), tuple(props))
