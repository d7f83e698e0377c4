import random

import pytest

from tptlmon.formula import ast, parse, parse_mtl, to_text
from tptlmon.formula.parser import ParseError
from tptlmon.generate import random_formula, random_mtl


def test_witness_formula_shape():
    f = parse("G x.(F (a /\\ x <= 1 /\\ G (x <= 1 -> !b)))")
    assert isinstance(f, ast.Always)
    frz = f.child
    assert isinstance(frz, ast.Freeze) and frz.var == "x"
    body = frz.child
    assert isinstance(body, ast.Eventually)
    conj = body.child
    assert conj == ast.And(
        ast.And(ast.Prop("a"), ast.Constraint("x", "<=", 1)),
        ast.Always(ast.Implies(ast.Constraint("x", "<=", 1), ast.Not(ast.Prop("b")))),
    )


def test_constants():
    assert parse("true") == ast.TrueConst()
    assert parse("false") == ast.Not(ast.TrueConst())
    assert to_text(parse("false")) == "false"


@pytest.mark.parametrize(
    "text, expected",
    [
        ("a -> b -> c", ast.Implies(ast.Prop("a"), ast.Implies(ast.Prop("b"), ast.Prop("c")))),
        ("a U b U c", ast.Until(ast.Prop("a"), ast.Until(ast.Prop("b"), ast.Prop("c")))),
        ("a R b", ast.Release(ast.Prop("a"), ast.Prop("b"))),
        ("a \\/ b /\\ c", ast.Or(ast.Prop("a"), ast.And(ast.Prop("b"), ast.Prop("c")))),
        ("a | b & c", ast.Or(ast.Prop("a"), ast.And(ast.Prop("b"), ast.Prop("c")))),
        ("!a U b", ast.Until(ast.Not(ast.Prop("a")), ast.Prop("b"))),
        ("~X a", ast.Not(ast.Next(ast.Prop("a")))),
        ("<> [] a", ast.Eventually(ast.Always(ast.Prop("a")))),
        ("F G a", ast.Eventually(ast.Always(ast.Prop("a")))),
        ("x.x < 0", ast.Freeze("x", ast.Constraint("x", "<", 0))),
        ("a /\\ b U c", ast.And(ast.Prop("a"), ast.Until(ast.Prop("b"), ast.Prop("c")))),
    ],
)
def test_precedence(text, expected):
    assert parse(text) == expected


def test_unicode_aliases():
    assert parse("□ x.(◇ a ∧ x ≤ 1)") == parse("G x.(F a /\\ x <= 1)")
    assert parse("¬a ∨ ○b → ⊤") == parse("!a \\/ X b -> true")


def test_identifier_lookahead():
    assert parse("x") == ast.Prop("x")
    assert parse("x.(x >= 2.5)") == ast.Freeze("x", ast.Constraint("x", ">=", 2.5))


def test_error_position_and_expected():
    with pytest.raises(ParseError) as err:
        parse("a /\\\n (b U")
    assert (err.value.line, err.value.column) == (2, 6)
    assert "(" in err.value.expected and "IDENT" in err.value.expected


@pytest.mark.parametrize("text", ["a /\\", "(a", "a b", ")", "x.", "x <=", "a U U b", ""])
def test_syntax_errors(text):
    with pytest.raises(ParseError):
        parse(text)


def test_negative_bound_rejected():
    with pytest.raises(ParseError, match="negative"):
        parse("x.(F x <= -1)")


@pytest.mark.parametrize("text", ["x.(y.(x + 1 <= 4))", "x.(y.(x <= y))"])
def test_two_variable_constraints_rejected(text):
    with pytest.raises(ParseError, match="two-variable"):
        parse(text)


def test_round_trip_random():
    rng = random.Random(7)
    for _ in range(1000):
        f = random_formula(rng, max_vars=3, encapsulated=rng.random() < 0.5)
        assert parse(to_text(f)) == f


def test_mtl_grammar():
    m = parse_mtl("a U[1,2] b")
    assert m == ast.UntilI(ast.Prop("a"), ast.Prop("b"), 1, 2)
    assert parse_mtl("F[0,inf] a") == ast.EventuallyI(ast.Prop("a"), 0, ast.INF)
    assert parse_mtl("G[0.5,3] a").lower == 0.5
    assert parse_mtl("a R[0,∞] b").upper == ast.INF


@pytest.mark.parametrize("text", ["a U[2,1] b", "x.(a)", "F[0,1] x <= 1", "a U[1 b"])
def test_mtl_errors(text):
    with pytest.raises((ParseError, ValueError)):
        parse_mtl(text)


def test_mtl_round_trip_random():
    rng = random.Random(3)
    for _ in range(500):
        m = random_mtl(rng)
        assert parse_mtl(to_text(m)) == m
