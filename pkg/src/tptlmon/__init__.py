"""Offline monitoring of encapsulated TPTL over finite timed state sequences."""

from .formula import (
    IndexedFormula,
    NotEncapsulatedError,
    ParseError,
    ValidationError,
    check_encapsulated,
    parse,
    parse_mtl,
    prepare,
    translate_mtl,
    validate_closed,
)
from .monitor import Stats, Verdict, dump_table, explain, monitor
from .oracle import eval_mtl, eval_semantics
from .trace import (
    PredicateMap,
    TimedStateSequence,
    TraceError,
    gen_random,
    load_predicate_map,
    load_trace,
)

__version__ = "0.1.0"

__all__ = [
    "IndexedFormula",
    "NotEncapsulatedError",
    "ParseError",
    "PredicateMap",
    "Stats",
    "TimedStateSequence",
    "TraceError",
    "ValidationError",
    "Verdict",
    "check_encapsulated",
    "dump_table",
    "eval_mtl",
    "eval_semantics",
    "explain",
    "gen_random",
    "load_predicate_map",
    "load_trace",
    "monitor",
    "parse",
    "parse_mtl",
    "prepare",
    "translate_mtl",
    "validate_closed",
]
