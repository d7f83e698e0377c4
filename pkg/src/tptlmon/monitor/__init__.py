"""Offline monitoring of encapsulated TPTL over finite timed state sequences.

Each freeze block is solved separately. For every sample ``t`` its
variable is instantiated to ``tau_t``, the block's constraints become
booleans, and the block is evaluated as LTL over columns ``t..end``. The
block's value at ``t`` is then copied into the freeze node's row. Blocks are
processed innermost first, and the outermost block last over all columns.
The verdict is cell ``[1, 0]``.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass

import numpy as np

from ..formula.indexing import IndexedFormula, prepare
from ..trace import TimedStateSequence
from . import reference
from .reference import compute_ltl, resolve_constraints
from .table import ColumnOrderError, MonitoringTable, UnsetCellError

try:
    from .compiled import CompiledFormula
except ImportError:  # pragma: no cover - numba missing
    CompiledFormula = None

ENGINES = ("compiled", "reference")


@dataclass(frozen=True)
class Stats:
    wall_time: float
    n_subformulas: int
    trace_length: int
    n_variables: int
    cell_writes: int


@dataclass(frozen=True)
class Verdict:
    satisfied: bool
    stats: Stats
    formula: IndexedFormula
    timestamps: tuple[float, ...]
    table: MonitoringTable | None = None

    def __bool__(self):
        return self.satisfied


def _default_engine():
    return "compiled" if CompiledFormula is not None else "reference"


def monitor(f, trace: TimedStateSequence, keep_table: bool = False, engine: str | None = None) -> Verdict:
    """Decide whether ``trace`` satisfies ``f`` at sample 0 with the zero environment.

    ``f`` may be formula text, an AST or an :class:`IndexedFormula`; the
    first two are validated and indexed here. ``engine`` chooses between the
    compiled kernel and the instrumented pure-Python reference engine, whose
    table checks evaluation order as it goes.
    """
    ix = prepare(f)
    if not isinstance(trace, TimedStateSequence):
        raise TypeError("trace must be a TimedStateSequence")
    n_cols = len(trace)
    if n_cols < 1:
        raise ValueError("empty trace")
    engine = engine or _default_engine()
    start = time.perf_counter()
    if engine == "compiled":
        if CompiledFormula is None:
            raise RuntimeError("compiled engine unavailable (numba not installed)")
        cells = np.full((ix.size + 1, n_cols), -1, dtype=np.int8, order="F")
        writes = CompiledFormula(ix).run(trace, cells)
        table = MonitoringTable(ix.size, n_cols, cells=cells)
        table.writes = writes
        satisfied = bool(cells[1, 0])
    elif engine == "reference":
        table = MonitoringTable(ix.size, n_cols, strict=True)
        satisfied = reference.run(ix, trace, table)
        writes = table.writes
    else:
        raise ValueError(f"unknown engine {engine!r}; choose from {ENGINES}")
    elapsed = time.perf_counter() - start
    stats = Stats(elapsed, ix.size, n_cols, len(ix.subtrees), writes)
    return Verdict(satisfied, stats, ix, trace.times, table if keep_table else None)


def explain(verdict: Verdict) -> dict:
    """Final table snapshot as a JSON-ready dict, one labelled row per subformula."""
    if verdict.table is None:
        raise ValueError("verdict was produced without keep_table=True")
    ix = verdict.formula
    rows = [
        {"index": j, "label": ix.label(j), "cells": verdict.table.row(j)}
        for j in range(1, ix.size + 1)
    ]
    return {
        "formula": str(ix.formula),
        "rows": rows,
        "timestamps": list(verdict.timestamps),
        "verdict": verdict.satisfied,
    }


def dump_table(verdict: Verdict) -> str:
    return json.dumps(explain(verdict), indent=2, ensure_ascii=False) + "\n"


__all__ = [
    "ColumnOrderError",
    "MonitoringTable",
    "Stats",
    "UnsetCellError",
    "Verdict",
    "compute_ltl",
    "dump_table",
    "explain",
    "monitor",
    "resolve_constraints",
]
