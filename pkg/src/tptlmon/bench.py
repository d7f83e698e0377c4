"""Timing harness over the EA/UR response-pattern formula families.

Every pattern has the shape ``G (a1 -> psi)``. ``psi`` nests ``ops/2``
copies of an Eventually/Always unit ``F (a2 /\\ G (a3 \\/ a4 /\\ ...))`` (EA)
or an Until/Release unit ``a2 U (a3 R (a4 /\\ ...))`` (UR). The temporal
operators are split into ``vars`` equal consecutive groups. Each group is
wrapped in a freeze binder, and its constraint ``C_v = v <= bound`` is
conjoined at the group's deepest operator. For example::

    EA, 2 ops, 1 var:  G (a1 -> x.(F (a2 /\\ G (a3 \\/ a4 /\\ x <= c))))
    EA, 2 ops, 2 vars: G (a1 -> x.(F (a2 /\\ x <= c /\\ y.(G (a3 \\/ a4 /\\ y <= c)))))
    UR, 2 ops, 2 vars: G (a1 -> x.(a2 U (a4 /\\ x <= c /\\ y.(a3 R (a4 /\\ y <= c)))))
"""

from __future__ import annotations

import csv
import io
import statistics
import time
from dataclasses import dataclass, field

from .formula import ast
from .formula.indexing import prepare
from .monitor import monitor
from .trace import gen_random

GROUPS = ("EA", "UR")
LEGAL_VARS = {2: (1, 2), 4: (1, 2, 4), 8: (1, 2, 4, 8)}
VAR_NAMES = ("x", "y", "z", "w", "u", "v", "s", "t")
PROPS = ("a1", "a2", "a3", "a4")


@dataclass(frozen=True)
class PatternSpec:
    group: str
    ops: int
    vars: int

    def __post_init__(self):
        group = self.group.upper()
        object.__setattr__(self, "group", group)
        if group not in GROUPS:
            raise ValueError(f"group must be EA or UR, got {self.group!r}")
        if self.ops not in LEGAL_VARS:
            raise ValueError(f"operator count must be 2, 4 or 8, got {self.ops}")
        if self.vars not in LEGAL_VARS[self.ops]:
            raise ValueError(f"{self.ops} operators allow {LEGAL_VARS[self.ops]} variables, got {self.vars}")

    def __str__(self):
        return f"{self.group}{self.ops}/V{self.vars}"


def pattern_configurations() -> list[PatternSpec]:
    """The 18 (group, ops, vars) combinations of the benchmark table."""
    return [PatternSpec(g, n, k) for g in GROUPS for n, ks in LEGAL_VARS.items() for k in ks]


def default_bound(ops: int, mean_step: float = 1.0) -> float:
    return 10.0 * mean_step * ops


def template(group: str, ops: int) -> ast.Formula:
    """The untimed ``psi`` template with ``ops`` temporal operators."""
    return _build(PatternSpec(group, ops, 1), bound=None)


def gen_pattern(spec: PatternSpec, bound: float | None = None, mean_step: float = 1.0) -> ast.Formula:
    if bound is None:
        bound = default_bound(spec.ops, mean_step)
    psi = _build(spec, bound)
    return ast.Always(ast.Implies(ast.Prop("a1"), psi))


def _build(spec, bound):
    a2, a3, a4 = (ast.Prop(p) for p in PROPS[1:])
    n = spec.ops
    size = n // spec.vars
    timed = bound is not None

    def op_at(i):
        inner = op_at(i + 1) if i + 1 < n else None
        if inner is not None and timed and (i + 1) % size == 0:
            inner = ast.Freeze(VAR_NAMES[(i + 1) // size], inner)
        guard = None
        if timed and i % size == size - 1:
            guard = ast.Constraint(VAR_NAMES[i // size], "<=", bound)
        first = i % 2 == 0
        if spec.group == "EA":
            if first:
                core = ast.And(a2, guard) if guard else a2
                return ast.Eventually(ast.And(core, inner))
            if inner is None:
                right = ast.And(a4, guard) if guard else a4
            else:
                right = ast.And(ast.And(a4, guard) if guard else a4, inner)
            return ast.Always(ast.Or(a3, right))
        if first:
            right = ast.And(ast.And(a4, guard), inner) if guard else inner
            return ast.Until(a2, right)
        if inner is None:
            right = ast.And(a4, guard) if guard else a4
        else:
            right = ast.And(ast.And(a4, guard) if guard else a4, inner)
        return ast.Release(a3, right)

    body = op_at(0)
    return ast.Freeze(VAR_NAMES[0], body) if timed else body


# -- timing --------------------------------------------------------------------


@dataclass(frozen=True)
class TimingRow:
    spec: PatternSpec
    trace_len: int
    samples: tuple[float, ...]

    @property
    def runs(self) -> int:
        return len(self.samples)

    @property
    def mean(self) -> float:
        return statistics.fmean(self.samples)

    @property
    def var(self) -> float:
        return statistics.variance(self.samples) if len(self.samples) > 1 else 0.0

    @property
    def median(self) -> float:
        return statistics.median(self.samples)


@dataclass
class TimingReport:
    rows: list[TimingRow] = field(default_factory=list)

    def lookup(self, spec: PatternSpec, trace_len: int) -> TimingRow:
        for row in self.rows:
            if row.spec == spec and row.trace_len == trace_len:
                return row
        raise KeyError((spec, trace_len))

    def length_ratios(self, stat: str = "mean") -> dict:
        """``{(spec, L): T(L) / T(L_min)}`` for each spec's shortest length ``L_min``."""
        out = {}
        for spec in dict.fromkeys(r.spec for r in self.rows):
            rows = sorted((r for r in self.rows if r.spec == spec), key=lambda r: r.trace_len)
            base = getattr(rows[0], stat)
            for r in rows[1:]:
                out[(spec, r.trace_len)] = getattr(r, stat) / base
        return out

    def variable_ratios(self, stat: str = "mean") -> dict:
        """``{(spec, L): T(spec) / T(same group and ops with 1 variable)}``."""
        out = {}
        for r in self.rows:
            if r.spec.vars == 1:
                continue
            try:
                base = self.lookup(PatternSpec(r.spec.group, r.spec.ops, 1), r.trace_len)
            except KeyError:
                continue
            out[(r.spec, r.trace_len)] = getattr(r, stat) / getattr(base, stat)
        return out

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["group", "ops", "vars", "trace_len", "runs", "mean_s", "var_s"])
        for r in self.rows:
            writer.writerow(
                [r.spec.group, r.spec.ops, r.spec.vars, r.trace_len, r.runs, f"{r.mean:.6g}", f"{r.var:.6g}"]
            )
        return out.getvalue()

    def summary(self) -> str:
        lines = ["length ratios (mean time relative to the shortest trace):"]
        for (spec, n), ratio in self.length_ratios().items():
            lines.append(f"  {spec} L={n}: {ratio:.2f}")
        lines.append("variable ratios (mean time relative to 1 variable):")
        for (spec, n), ratio in self.variable_ratios().items():
            lines.append(f"  {spec} L={n}: {ratio:.2f}")
        return "\n".join(lines) + "\n"


def trace_seed(seed: int, trace_len: int, run: int) -> int:
    return (seed * 1_000_003 + trace_len * 7919 + run) % 2**63


def run_benchmark(specs, lengths, runs: int = 5, seed: int = 0, engine=None, mean_step: float = 1.0, bound=None) -> TimingReport:
    """Time ``monitor`` on ``runs`` random traces per (spec, length).

    Traces depend only on ``(seed, length, run)``, so all specs see the same
    inputs. Measurements are interleaved round-robin (run ``r`` of every
    configuration before run ``r + 1`` of any), so a slow stretch on a busy
    machine spreads over all configurations instead of skewing one of them.
    One untimed warm-up call per spec precedes the measurements.
    """
    if runs < 3:
        raise ValueError("runs must be at least 3")
    specs = list(specs)
    lengths = list(lengths)
    compiled = {}
    for spec in specs:
        ix = prepare(gen_pattern(spec, bound=bound, mean_step=mean_step))
        monitor(ix, gen_random(8, PROPS, mean_step, seed), engine=engine)
        compiled[spec] = ix
    samples = {(spec, n): [] for spec in specs for n in lengths}
    for r in range(runs):
        for n in lengths:
            trace = gen_random(n, PROPS, mean_step, trace_seed(seed, n, r))
            trace.timestamps  # build cached arrays outside the timed region
            for p in PROPS:
                trace.valuation(p)
            for spec in specs:
                start = time.perf_counter()
                monitor(compiled[spec], trace, engine=engine)
                samples[spec, n].append(time.perf_counter() - start)
    report = TimingReport()
    for spec in specs:
        for n in lengths:
            report.rows.append(TimingRow(spec, n, tuple(samples[spec, n])))
    return report
