"""Embedding of bounded MTL into encapsulated TPTL.

``psi U[l,u] phi`` becomes ``x.(psi U (x >= l /\\ x <= u /\\ phi))`` with a
fresh ``x`` per timed operator; the bounded ``F``, ``G`` and ``R`` are first
rewritten through ``U[l,u]`` and negation. Operators over ``[0, inf]`` carry
no timing information and map to their untimed counterparts.
"""

from __future__ import annotations

import math
from itertools import count

from . import ast


def _untimed(node) -> bool:
    return node.lower == 0 and math.isinf(node.upper)


def translate_mtl(m: ast.Formula, prefix: str = "x") -> ast.Formula:
    names = (f"{prefix}{i}" for i in count(1))

    def until(left, right, lower, upper):
        var = next(names)
        guard = ast.Constraint(var, ">=", lower)
        if not math.isinf(upper):
            guard = ast.And(guard, ast.Constraint(var, "<=", upper))
        return ast.Freeze(var, ast.Until(go(left), ast.And(guard, go(right))))

    def go(node):
        if isinstance(node, (ast.TrueConst, ast.Prop)):
            return node
        if isinstance(node, (ast.Not, ast.Next)):
            return type(node)(go(node.child))
        if isinstance(node, (ast.And, ast.Or, ast.Implies)):
            return type(node)(go(node.left), go(node.right))
        if isinstance(node, ast.UntilI):
            if _untimed(node):
                return ast.Until(go(node.left), go(node.right))
            return until(node.left, node.right, node.lower, node.upper)
        if isinstance(node, ast.EventuallyI):
            if _untimed(node):
                return ast.Eventually(go(node.child))
            return until(ast.TrueConst(), node.child, node.lower, node.upper)
        if isinstance(node, ast.AlwaysI):
            if _untimed(node):
                return ast.Always(go(node.child))
            return ast.Not(until(ast.TrueConst(), ast.Not(node.child), node.lower, node.upper))
        if isinstance(node, ast.ReleaseI):
            if _untimed(node):
                return ast.Release(go(node.left), go(node.right))
            return ast.Not(until(ast.Not(node.left), ast.Not(node.right), node.lower, node.upper))
        raise TypeError(f"not an MTL node: {node!r}")

    return go(m)
