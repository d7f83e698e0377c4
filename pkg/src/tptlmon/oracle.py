"""Reference evaluators for differential testing.

:func:`eval_semantics` is a direct recursive reading of the finite-trace
TPTL satisfaction relation with explicit environments. It shares no code
with the table engine, does no memoization, and accepts any closed formula
(encapsulated or not). Derived operators are evaluated through their
defining expansions. :func:`eval_mtl` is the point-based finite-trace
semantics of bounded MTL. Both are exponential in temporal nesting depth
and meant for short traces only.
"""

from __future__ import annotations

from typing import Mapping

from .formula import ast
from .relations import compare
from .trace import TimedStateSequence


class UnboundVariableError(LookupError):
    pass


def _until(holds_left, holds_right, i, n):
    # exists j in [i, n) with right at j and left on [i, j)
    for j in range(i, n):
        if holds_right(j):
            return True
        if not holds_left(j):
            return False
    return False


def eval_semantics(f: ast.Formula, trace: TimedStateSequence, i: int = 0, env: Mapping[str, float] | None = None) -> bool:
    """Whether ``(trace, i, env)`` satisfies ``f``; ``env=None`` is the empty environment."""
    n = len(trace)
    if not 0 <= i < n:
        raise IndexError(f"sample {i} outside trace of length {n}")
    env = {} if env is None else env

    def sat(node, i, env):
        if isinstance(node, ast.TrueConst):
            return True
        if isinstance(node, ast.Prop):
            return node.name in trace.states[i]
        if isinstance(node, ast.Not):
            return not sat(node.child, i, env)
        if isinstance(node, ast.And):
            return sat(node.left, i, env) and sat(node.right, i, env)
        if isinstance(node, ast.Or):
            return sat(node.left, i, env) or sat(node.right, i, env)
        if isinstance(node, ast.Next):
            return i < n - 1 and sat(node.child, i + 1, env)
        if isinstance(node, ast.Until):
            return _until(
                lambda k: sat(node.left, k, env), lambda k: sat(node.right, k, env), i, n
            )
        if isinstance(node, ast.Constraint):
            if node.var not in env:
                raise UnboundVariableError(node.var)
            return compare(trace.times[i] - env[node.var], node.relation, node.bound)
        if isinstance(node, ast.Freeze):
            return sat(node.child, i, {**env, node.var: trace.times[i]})
        # derived operators
        if isinstance(node, ast.Implies):
            return sat(ast.Or(ast.Not(node.left), node.right), i, env)
        if isinstance(node, ast.Eventually):
            return sat(ast.Until(ast.TrueConst(), node.child), i, env)
        if isinstance(node, ast.Always):
            return sat(ast.Not(ast.Eventually(ast.Not(node.child))), i, env)
        if isinstance(node, ast.Release):
            return sat(ast.Not(ast.Until(ast.Not(node.left), ast.Not(node.right))), i, env)
        raise TypeError(f"not a TPTL node: {node!r}")

    return sat(f, i, env)


def eval_mtl(m: ast.Formula, trace: TimedStateSequence, i: int = 0) -> bool:
    n = len(trace)
    if not 0 <= i < n:
        raise IndexError(f"sample {i} outside trace of length {n}")
    times = trace.times

    def sat(node, i):
        if isinstance(node, ast.TrueConst):
            return True
        if isinstance(node, ast.Prop):
            return node.name in trace.states[i]
        if isinstance(node, ast.Not):
            return not sat(node.child, i)
        if isinstance(node, ast.And):
            return sat(node.left, i) and sat(node.right, i)
        if isinstance(node, ast.Or):
            return sat(node.left, i) or sat(node.right, i)
        if isinstance(node, ast.Implies):
            return not sat(node.left, i) or sat(node.right, i)
        if isinstance(node, ast.Next):
            return i < n - 1 and sat(node.child, i + 1)
        if isinstance(node, ast.UntilI):
            for j in range(i, n):
                elapsed = times[j] - times[i]
                if node.lower <= elapsed <= node.upper and sat(node.right, j):
                    return True
                if not sat(node.left, j):
                    return False
            return False
        if isinstance(node, ast.EventuallyI):
            return sat(ast.UntilI(ast.TrueConst(), node.child, node.lower, node.upper), i)
        if isinstance(node, ast.AlwaysI):
            return not sat(ast.EventuallyI(ast.Not(node.child), node.lower, node.upper), i)
        if isinstance(node, ast.ReleaseI):
            return not sat(
                ast.UntilI(ast.Not(node.left), ast.Not(node.right), node.lower, node.upper), i
            )
        raise TypeError(f"not an MTL node: {node!r}")

    return sat(m, i)
