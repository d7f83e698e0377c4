"""Finite timed state sequences: construction, I/O and signal abstraction.

CSV traces have a ``time`` column followed by one column per proposition
(cells ``0``/``1``/``true``/``false``). JSON traces are arrays of
``{"time": t, "state": [names]}`` or ``{"time": t, "signals": {col: value}}``
objects; numeric rows are turned into states by a :class:`PredicateMap`,
written one predicate per line as ``name := column <op> number``.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np

from .relations import RELATIONS, compare


class TraceError(ValueError):
    """Malformed or invalid trace data."""


@dataclass(frozen=True)
class TimedStateSequence:
    """A finite sequence of ``(timestamp, state)`` samples.

    Timestamps start at 0 and never decrease. ``propositions`` lists every
    proposition known to the trace, including ones that are never true.
    """

    times: tuple[float, ...]
    states: tuple[frozenset, ...]
    propositions: tuple[str, ...] = ()

    def __post_init__(self):
        times = tuple(float(t) for t in self.times)
        states = tuple(frozenset(s) for s in self.states)
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "states", states)
        if not times:
            raise TraceError("empty trace")
        if len(times) != len(states):
            raise TraceError(f"{len(times)} timestamps but {len(states)} states")
        for i, t in enumerate(times):
            if not math.isfinite(t) or t < 0:
                raise TraceError(f"sample {i}: invalid timestamp {t}")
            if i and t < times[i - 1]:
                raise TraceError(f"sample {i}: timestamp {t} precedes {times[i - 1]}")
        if times[0] != 0:
            raise TraceError(f"first timestamp is {times[0]}, expected 0 (use normalize=True)")
        known = set(self.propositions)
        for s in states:
            known |= s
        object.__setattr__(self, "propositions", tuple(sorted(known)))

    @classmethod
    def from_samples(cls, samples, propositions=(), normalize=False):
        """Build from ``(time, state)`` pairs, optionally shifting time to start at 0."""
        samples = list(samples)
        if not samples:
            raise TraceError("empty trace")
        times = [float(t) for t, _ in samples]
        if normalize:
            t0 = times[0]
            times = [t - t0 for t in times]
        return cls(tuple(times), tuple(frozenset(s) for _, s in samples), tuple(propositions))

    def __len__(self):
        return len(self.times)

    def __iter__(self):
        return iter(zip(self.times, self.states))

    def __getitem__(self, i):
        return self.times[i], self.states[i]

    @cached_property
    def timestamps(self) -> np.ndarray:
        arr = np.asarray(self.times, dtype=np.float64)
        arr.flags.writeable = False
        return arr

    @cached_property
    def _valuations(self) -> dict:
        return {}

    def valuation(self, name: str) -> np.ndarray:
        """Read-only boolean column of proposition ``name`` (all false if unknown)."""
        cache = self._valuations
        if name not in cache:
            arr = np.fromiter((name in s for s in self.states), dtype=bool, count=len(self))
            arr.flags.writeable = False
            cache[name] = arr
        return cache[name]


# -- boolean trace I/O ------------------------------------------------------

_TRUE = {"1", "true", "True", "TRUE"}
_FALSE = {"0", "false", "False", "FALSE"}


def _parse_bool(cell, row, col):
    cell = cell.strip()
    if cell in _TRUE:
        return True
    if cell in _FALSE:
        return False
    raise TraceError(f"row {row}, column {col!r}: expected 0/1/true/false, got {cell!r}")


def _parse_time(cell, row):
    try:
        return float(cell)
    except (TypeError, ValueError):
        raise TraceError(f"row {row}: bad timestamp {cell!r}") from None


def _read_text(source) -> str:
    if isinstance(source, (str, os.PathLike)):
        with open(source, "rb") as fh:
            data = fh.read()
    else:
        data = source.read()
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    return data


def _csv_rows(text):
    rows = [r for r in csv.reader(io.StringIO(text)) if r and any(c.strip() for c in r)]
    if not rows:
        raise TraceError("empty input")
    header = [h.strip() for h in rows[0]]
    if not header or header[0] != "time":
        raise TraceError(f"CSV header must start with 'time', got {header[:1]}")
    if len(set(header)) != len(header):
        raise TraceError("duplicate CSV column")
    body = rows[1:]
    if not body:
        raise TraceError("empty trace")
    for lineno, row in enumerate(body, start=2):
        if len(row) != len(header):
            raise TraceError(f"row {lineno}: expected {len(header)} cells, got {len(row)}")
    return header, body


def load_trace(source, format="csv", *, predicate_map=None, normalize=False) -> TimedStateSequence:
    """Read a trace from a path or a (byte or text) stream.

    With ``predicate_map`` the cells are read as real-valued signals and
    abstracted to propositions; otherwise cells must be booleans.
    """
    if predicate_map is not None:
        return apply_predicate_map(load_signals(source, format), predicate_map, normalize=normalize)
    text = _read_text(source)
    if format == "csv":
        header, body = _csv_rows(text)
        names = header[1:]
        samples = []
        for lineno, row in enumerate(body, start=2):
            t = _parse_time(row[0], lineno)
            state = {n for n, c in zip(names, row[1:]) if _parse_bool(c, lineno, n)}
            samples.append((t, state))
        return TimedStateSequence.from_samples(samples, names, normalize=normalize)
    if format == "json":
        samples = []
        names = set()
        for i, obj in enumerate(_json_array(text)):
            if "state" not in obj:
                raise TraceError(f"sample {i}: missing 'state' (signal traces need a predicate map)")
            state = obj["state"]
            if not isinstance(state, list) or not all(isinstance(s, str) for s in state):
                raise TraceError(f"sample {i}: 'state' must be a list of names")
            names.update(state)
            samples.append((_json_time(obj, i), set(state)))
        return TimedStateSequence.from_samples(samples, sorted(names), normalize=normalize)
    raise TraceError(f"unknown trace format {format!r}")


def _json_array(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TraceError(f"invalid JSON: {exc}") from None
    if not isinstance(data, list):
        raise TraceError("JSON trace must be an array of samples")
    if not data:
        raise TraceError("empty trace")
    for i, obj in enumerate(data):
        if not isinstance(obj, dict):
            raise TraceError(f"sample {i}: expected an object")
    return data


def _json_time(obj, i):
    t = obj.get("time")
    if isinstance(t, bool) or not isinstance(t, (int, float)):
        raise TraceError(f"sample {i}: 'time' must be a number")
    return float(t)


def dumps_csv(trace: TimedStateSequence) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["time", *trace.propositions])
    for t, state in trace:
        writer.writerow([repr(t), *(int(p in state) for p in trace.propositions)])
    return out.getvalue()


def write_csv(trace: TimedStateSequence, dest) -> None:
    text = dumps_csv(trace)
    if isinstance(dest, (str, os.PathLike)):
        with open(dest, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        dest.write(text)


# -- numeric signals and predicates -------------------------------------------


@dataclass(frozen=True)
class Predicate:
    name: str
    column: str
    relation: str
    threshold: float

    def holds(self, value: float) -> bool:
        return compare(value, self.relation, self.threshold)

    def __str__(self):
        return f"{self.name} := {self.column} {self.relation} {self.threshold!r}"


@dataclass(frozen=True)
class PredicateMap:
    predicates: tuple[Predicate, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "predicates", tuple(self.predicates))
        names = [p.name for p in self.predicates]
        dupes = {n for n in names if names.count(n) > 1}
        if dupes:
            raise TraceError(f"duplicate predicate names: {sorted(dupes)}")
        for p in self.predicates:
            if p.relation not in RELATIONS:
                raise TraceError(f"unknown relation {p.relation!r}")

    def __iter__(self):
        return iter(self.predicates)

    def __len__(self):
        return len(self.predicates)

    @property
    def names(self):
        return tuple(p.name for p in self.predicates)


_PRED_RE = re.compile(
    r"^\s*(?P<name>[A-Za-z_]\w*)\s*:=\s*(?P<col>[A-Za-z_]\w*)\s*"
    r"(?P<op><=|>=|<|>|=)\s*(?P<num>[-+]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][-+]?\d+)?)\s*$"
)


def parse_predicate_map(text: str) -> PredicateMap:
    """Parse ``name := column <op> number`` lines; ``#`` starts a comment."""
    preds = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0]
        if not line.strip():
            continue
        m = _PRED_RE.match(line)
        if m is None:
            raise TraceError(f"predicate map line {lineno}: cannot parse {line.strip()!r}")
        preds.append(Predicate(m["name"], m["col"], m["op"], float(m["num"])))
    return PredicateMap(tuple(preds))


def load_predicate_map(source) -> PredicateMap:
    return parse_predicate_map(_read_text(source))


Row = tuple[float, Mapping[str, float]]


def load_signals(source, format="csv") -> list[Row]:
    """Read a real-valued signal trace as ``(time, {column: value})`` rows."""
    text = _read_text(source)
    rows = []
    if format == "csv":
        header, body = _csv_rows(text)
        for lineno, row in enumerate(body, start=2):
            values = {}
            for name, cell in zip(header[1:], row[1:]):
                try:
                    values[name] = float(cell)
                except ValueError:
                    raise TraceError(f"row {lineno}, column {name!r}: not a number: {cell!r}") from None
            rows.append((_parse_time(row[0], lineno), values))
        return rows
    if format == "json":
        for i, obj in enumerate(_json_array(text)):
            signals = obj.get("signals")
            if not isinstance(signals, dict):
                raise TraceError(f"sample {i}: missing 'signals' object")
            rows.append((_json_time(obj, i), {k: float(v) for k, v in signals.items()}))
        return rows
    raise TraceError(f"unknown trace format {format!r}")


def map_states(rows: Iterable[Row], pmap: PredicateMap) -> list[frozenset]:
    """Pointwise abstraction: the set of predicates that hold on each row."""
    states = []
    for i, (_, values) in enumerate(rows):
        state = set()
        for p in pmap:
            if p.column not in values:
                raise TraceError(f"row {i}: missing column {p.column!r}")
            if p.holds(values[p.column]):
                state.add(p.name)
        states.append(frozenset(state))
    return states


def apply_predicate_map(rows: Sequence[Row], pmap: PredicateMap, normalize=False) -> TimedStateSequence:
    rows = list(rows)
    states = map_states(rows, pmap)
    samples = [(t, s) for (t, _), s in zip(rows, states)]
    return TimedStateSequence.from_samples(samples, pmap.names, normalize=normalize)


# -- random traces -------------------------------------------------------------


def gen_random(length: int, propositions: Sequence[str], mean_step: float, seed: int) -> TimedStateSequence:
    """Random trace: steps uniform on (0, 2*mean_step], each proposition true w.p. 1/2."""
    if length < 1:
        raise TraceError("length must be at least 1")
    if not mean_step > 0:
        raise TraceError("mean_step must be positive")
    rng = np.random.default_rng(seed)
    # 2m - U[0, 2m) lies in (0, 2m]
    steps = 2 * mean_step - rng.uniform(0.0, 2 * mean_step, size=length - 1)
    times = np.concatenate(([0.0], np.cumsum(steps)))
    props = list(propositions)
    bits = rng.random((length, len(props))) < 0.5
    states = [frozenset(p for p, b in zip(props, row) if b) for row in bits]
    return TimedStateSequence(tuple(times.tolist()), tuple(states), tuple(props))
