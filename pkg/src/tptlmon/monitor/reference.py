"""Cell-by-cell table engine, written for checking rather than speed.

Every cell goes through :func:`compute_ltl` or :func:`resolve_constraints`
on a :class:`MonitoringTable`, so a strict table can verify read-after-write
order and column bounds and count writes.
"""

from __future__ import annotations

from ..formula import ast
from ..formula.indexing import FrozenSubtree, IndexedFormula
from ..relations import compare
from ..trace import TimedStateSequence
from .table import MonitoringTable

_STORED = (ast.TrueConst, ast.Prop, ast.Constraint, ast.Freeze)


def compute_ltl(f: IndexedFormula, j: int, u: int, table: MonitoringTable) -> bool:
    """Value of row ``j`` at column ``u`` from its children's cells.

    Covers the core operators (not, and, or, next, until) plus direct
    recurrences for implies, eventually, always and release. Leaf and freeze
    rows return the stored cell.
    """
    node = f[j]
    phi = node.formula
    if isinstance(phi, _STORED):
        return table[j, u]
    last = u == table.n_cols - 1
    m = node.children[0]
    if isinstance(phi, ast.Not):
        return not table[m, u]
    if isinstance(phi, ast.Next):
        return False if last else table[m, u + 1]
    if isinstance(phi, ast.Eventually):
        here = table[m, u]
        return here if last else here | table[j, u + 1]
    if isinstance(phi, ast.Always):
        here = table[m, u]
        return here if last else here & table[j, u + 1]
    n = node.children[1]
    if isinstance(phi, ast.And):
        return table[m, u] & table[n, u]
    if isinstance(phi, ast.Or):
        return table[m, u] | table[n, u]
    if isinstance(phi, ast.Implies):
        return (not table[m, u]) | table[n, u]
    if isinstance(phi, ast.Until):
        right = table[n, u]
        return right if last else right | (table[m, u] & table[j, u + 1])
    if isinstance(phi, ast.Release):
        right = table[n, u]
        return right if last else right & (table[m, u] | table[j, u + 1])
    raise TypeError(f"no table rule for {type(phi).__name__}")


def resolve_constraints(
    table: MonitoringTable,
    f: IndexedFormula,
    subtree: FrozenSubtree,
    t: int,
    trace: TimedStateSequence,
) -> None:
    """Instantiate the block variable at sample ``t``: write ``(tau_u - tau_t) ~ r``
    into every constraint row of the block for ``u >= t``."""
    times = trace.times
    for u in range(t, len(times)):
        elapsed = times[u] - times[t]
        for j in subtree.constraints:
            c = f[j].formula
            table[j, u] = compare(elapsed, c.relation, c.bound)


def _computed_rows(f, block):
    return [j for j in block.rows if not isinstance(f[j].formula, _STORED)]


def _evaluate_block(f, block, rows, t, table):
    for u in range(table.n_cols - 1, t - 1, -1):
        for j in rows:
            table[j, u] = compute_ltl(f, j, u, table)


def initialize_leaves(f: IndexedFormula, trace: TimedStateSequence, table: MonitoringTable) -> None:
    for node in f.nodes:
        if isinstance(node.formula, ast.TrueConst):
            for u in range(len(trace)):
                table[node.index, u] = True
        elif isinstance(node.formula, ast.Prop):
            name = node.formula.name
            for u, state in enumerate(trace.states):
                table[node.index, u] = name in state


def run(f: IndexedFormula, trace: TimedStateSequence, table: MonitoringTable) -> bool:
    initialize_leaves(f, trace, table)
    for sub in f.subtrees:
        rows = sorted(_computed_rows(f, sub), reverse=True)
        fresh = set(rows) | set(sub.constraints)
        for t in range(len(trace)):
            table.begin_pass(fresh, floor=t)
            resolve_constraints(table, f, sub, t, trace)
            _evaluate_block(f, sub, rows, t, table)
            table[sub.parent, t] = table[sub.root, t]
    outer = f.outer
    rows = sorted(_computed_rows(f, outer), reverse=True)
    table.begin_pass(rows, floor=0)
    _evaluate_block(f, outer, rows, 0, table)
    return table[1, 0]
