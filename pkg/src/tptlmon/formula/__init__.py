"""TPTL formulas: syntax trees, parsing, validation, indexing, MTL embedding."""

from .ast import (
    INF,
    Always,
    AlwaysI,
    And,
    Constraint,
    Eventually,
    EventuallyI,
    Formula,
    Freeze,
    Implies,
    Next,
    Not,
    Or,
    Prop,
    Release,
    ReleaseI,
    TrueConst,
    Until,
    UntilI,
    false,
    to_text,
)
from .checks import (
    EncapsulationResult,
    ValidationError,
    Violation,
    alpha_rename,
    check_encapsulated,
    describe_path,
    subformula_at,
    validate_closed,
)
from .indexing import (
    FrozenSubtree,
    IndexedFormula,
    IndexedNode,
    NotEncapsulatedError,
    index_subformulas,
    partition_subtrees,
    prepare,
)
from .mtl import translate_mtl
from .parser import ParseError, parse, parse_mtl

__all__ = [name for name in dir() if not name.startswith("_")]
