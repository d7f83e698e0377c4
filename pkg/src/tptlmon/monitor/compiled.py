"""Compiled table engine (numba).

Same loop structure and cell rules as :mod:`.reference`, over flat arrays
describing the indexed formula. Used by default and for benchmarking.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from ..formula import ast
from ..formula.indexing import IndexedFormula
from ..relations import RELATION_CODES
from ..trace import TimedStateSequence

TRUE, PROP, CONSTRAINT, FREEZE = 0, 1, 2, 3
NOT, AND, OR, IMPLIES, NEXT, UNTIL, RELEASE, EVENTUALLY, ALWAYS = range(4, 13)

KIND_CODES = {
    ast.TrueConst: TRUE,
    ast.Prop: PROP,
    ast.Constraint: CONSTRAINT,
    ast.Freeze: FREEZE,
    ast.Not: NOT,
    ast.And: AND,
    ast.Or: OR,
    ast.Implies: IMPLIES,
    ast.Next: NEXT,
    ast.Until: UNTIL,
    ast.Release: RELEASE,
    ast.Eventually: EVENTUALLY,
    ast.Always: ALWAYS,
}


@njit(cache=True)
def _holds(elapsed, rel, bound):
    if rel == 0:
        return elapsed <= bound
    if rel == 1:
        return elapsed < bound
    if rel == 2:
        return elapsed == bound
    if rel == 3:
        return elapsed > bound
    return elapsed >= bound


@njit(cache=True)
def _evaluate_block(kind, left, right, lo, hi, t, table):
    n_cols = table.shape[1]
    last = n_cols - 1
    writes = 0
    for u in range(last, t - 1, -1):
        for j in range(hi, lo - 1, -1):
            k = kind[j]
            if k <= FREEZE:
                continue
            m = left[j]
            if k == NOT:
                v = 1 - table[m, u]
            elif k == AND:
                v = table[m, u] & table[right[j], u]
            elif k == OR:
                v = table[m, u] | table[right[j], u]
            elif k == IMPLIES:
                v = (1 - table[m, u]) | table[right[j], u]
            elif k == NEXT:
                v = 0 if u == last else table[m, u + 1]
            elif k == UNTIL:
                v = table[right[j], u]
                if u != last:
                    v = v | (table[m, u] & table[j, u + 1])
            elif k == RELEASE:
                v = table[right[j], u]
                if u != last:
                    v = v & (table[m, u] | table[j, u + 1])
            elif k == EVENTUALLY:
                v = table[m, u]
                if u != last:
                    v = v | table[j, u + 1]
            else:  # ALWAYS
                v = table[m, u]
                if u != last:
                    v = v & table[j, u + 1]
            table[j, u] = v
            writes += 1
    return writes


@njit(cache=True)
def _run(kind, left, right, rel, bound, parents, roots, los, his, cons_ptr, cons_rows, outer_lo, outer_hi, times, table):
    n_cols = times.shape[0]
    writes = 0
    for k in range(parents.shape[0]):
        for t in range(n_cols):
            for u in range(t, n_cols):
                elapsed = times[u] - times[t]
                for c in range(cons_ptr[k], cons_ptr[k + 1]):
                    j = cons_rows[c]
                    table[j, u] = 1 if _holds(elapsed, rel[j], bound[j]) else 0
                    writes += 1
            writes += _evaluate_block(kind, left, right, los[k], his[k], t, table)
            table[parents[k], t] = table[roots[k], t]
            writes += 1
    writes += _evaluate_block(kind, left, right, outer_lo, outer_hi, 0, table)
    return writes


class CompiledFormula:
    """Flat-array view of an :class:`IndexedFormula` for the kernel."""

    def __init__(self, f: IndexedFormula):
        n = f.size + 1
        self.kind = np.zeros(n, dtype=np.int64)
        self.left = np.zeros(n, dtype=np.int64)
        self.right = np.zeros(n, dtype=np.int64)
        self.rel = np.zeros(n, dtype=np.int64)
        self.bound = np.zeros(n, dtype=np.float64)
        self.props = []
        self.trues = []
        for node in f.nodes:
            j = node.index
            phi = node.formula
            self.kind[j] = KIND_CODES[type(phi)]
            if node.children:
                self.left[j] = node.children[0]
            if len(node.children) > 1:
                self.right[j] = node.children[1]
            if isinstance(phi, ast.Constraint):
                self.rel[j] = RELATION_CODES[phi.relation]
                self.bound[j] = phi.bound
            elif isinstance(phi, ast.Prop):
                self.props.append((j, phi.name))
            elif isinstance(phi, ast.TrueConst):
                self.trues.append(j)
        subs = f.subtrees
        self.parents = np.array([s.parent for s in subs], dtype=np.int64)
        self.roots = np.array([s.root for s in subs], dtype=np.int64)
        self.los = np.array([s.min for s in subs], dtype=np.int64)
        self.his = np.array([s.max for s in subs], dtype=np.int64)
        counts = [len(s.constraints) for s in subs]
        self.cons_ptr = np.concatenate(([0], np.cumsum(counts))).astype(np.int64)
        self.cons_rows = np.array([j for s in subs for j in s.constraints], dtype=np.int64)
        self.outer_lo = f.outer.min
        self.outer_hi = f.outer.max

    def run(self, trace: TimedStateSequence, cells: np.ndarray) -> int:
        """Fill ``cells`` (shape ``(|f|+1, |trace|)``); return the number of writes."""
        n_cols = len(trace)
        writes = 0
        for j in self.trues:
            cells[j, :] = 1
            writes += n_cols
        for j, name in self.props:
            cells[j, :] = trace.valuation(name)
            writes += n_cols
        writes += _run(
            self.kind, self.left, self.right, self.rel, self.bound,
            self.parents, self.roots, self.los, self.his,
            self.cons_ptr, self.cons_rows, self.outer_lo, self.outer_hi,
            trace.timestamps, cells,
        )
        return writes
