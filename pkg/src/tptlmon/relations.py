"""Comparison relations shared by time constraints and signal predicates."""

import operator

RELATIONS = {
    "<=": operator.le,
    "<": operator.lt,
    "=": operator.eq,
    ">": operator.gt,
    ">=": operator.ge,
}

# stable integer codes used by the compiled engine
RELATION_CODES = {"<=": 0, "<": 1, "=": 2, ">": 3, ">=": 4}


def compare(lhs: float, relation: str, rhs: float) -> bool:
    # exact floating-point comparison, no epsilon
    return RELATIONS[relation](lhs, rhs)
