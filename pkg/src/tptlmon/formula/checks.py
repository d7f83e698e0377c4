"""Closedness and encapsulation checks, and alpha-renaming of freeze binders.

Positions inside a formula are reported as *paths*: tuples of child
positions from the root (``0`` for the only/left child, ``1`` for the right
child). :func:`describe_path` turns a path into a readable breadcrumb.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import count

from . import ast


class ValidationError(ValueError):
    """A formula failed a structural precondition of the monitor."""


@dataclass(frozen=True)
class Violation:
    var: str
    path: tuple[int, ...]
    node: ast.Formula

    def __str__(self):
        return f"unbound time variable {self.var!r} in {self.node}"


@dataclass(frozen=True)
class EncapsulationResult:
    ok: bool
    witness: tuple[int, ...] | None = None
    node: ast.Formula | None = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def subformula_at(f: ast.Formula, path) -> ast.Formula:
    for step in path:
        f = f.children[step]
    return f


def describe_path(f: ast.Formula, path) -> str:
    """Breadcrumb of operator symbols from the root down to ``path``."""
    crumbs = []
    node = f
    for step in path:
        crumbs.append(_label(node))
        node = node.children[step]
    crumbs.append(str(node))
    return " > ".join(crumbs)


def _label(node):
    if isinstance(node, ast.Freeze):
        return f"{node.var}."
    sym = ast.BINARY_SYMBOLS.get(type(node)) or ast.UNARY_SYMBOLS.get(type(node))
    return (sym or type(node).__name__).strip()


def _walk_paths(f, path=(), binders=()):
    """Yield ``(node, path, binders)``; ``binders`` lists the enclosing
    freeze variables, innermost last."""
    yield f, path, binders
    inner = binders + (f.var,) if isinstance(f, ast.Freeze) else binders
    for i, child in enumerate(f.children):
        yield from _walk_paths(child, path + (i,), inner)


def validate_closed(f: ast.Formula) -> list[Violation]:
    """Return every constraint whose variable has no enclosing binder.

    An empty list means the formula is closed.
    """
    return [
        Violation(node.var, path, node)
        for node, path, binders in _walk_paths(f)
        if isinstance(node, ast.Constraint) and node.var not in binders
    ]


def check_encapsulated(f: ast.Formula) -> EncapsulationResult:
    """Decide whether every time variable of a closed formula is independent.

    A constraint must mention exactly the variable of its innermost
    enclosing freeze; re-binding a name inside its own scope is rejected.
    """
    for node, path, binders in _walk_paths(f):
        if isinstance(node, ast.Freeze) and node.var in binders:
            return EncapsulationResult(
                False, path, node, f"variable {node.var!r} re-frozen inside its own scope"
            )
        if isinstance(node, ast.Constraint):
            if not binders:
                return EncapsulationResult(False, path, node, f"unbound variable {node.var!r}")
            if binders[-1] != node.var:
                return EncapsulationResult(
                    False,
                    path,
                    node,
                    f"constraint {node} refers to {node.var!r} inside the scope of {binders[-1]}.",
                )
    return EncapsulationResult(True)


def has_unique_binders(f: ast.Formula) -> bool:
    names = [n.var for n in f.walk() if isinstance(n, ast.Freeze)]
    return len(names) == len(set(names))


def alpha_rename(f: ast.Formula) -> ast.Formula:
    """Give every freeze binder a fresh, globally unique variable name.

    Fresh names are the original name plus a counter (``x`` becomes ``x1``,
    ``x2``, ...), skipping anything already used in the formula. Binders are
    renamed in pre-order.
    """
    used = {n.var for n in f.walk() if isinstance(n, (ast.Freeze, ast.Constraint))}
    counters = {}

    def fresh(base):
        counter = counters.setdefault(base, count(1))
        while True:
            name = f"{base}{next(counter)}"
            if name not in used:
                used.add(name)
                return name

    def rename(node, env):
        if isinstance(node, ast.Constraint):
            if node.var not in env:
                raise ValidationError(f"unbound time variable {node.var!r}")
            return ast.Constraint(env[node.var], node.relation, node.bound)
        if isinstance(node, ast.Freeze):
            new = fresh(node.var)
            return ast.Freeze(new, rename(node.child, {**env, node.var: new}))
        if isinstance(node, (ast.TrueConst, ast.Prop)):
            return node
        return type(node)(*(rename(c, env) for c in node.children))

    return rename(f, {})
