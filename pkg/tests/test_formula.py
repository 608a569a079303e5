import pytest
from hypothesis import given

from modalsynth.formula import (
    FALSE, HOLE, And, Atom, Box, Diamond, FormulaSyntaxError, Iff, Imp, Not, Or, atoms,
    desugar_negation, parse, render, subformulas,
)

from oracles import random_formula, rng
from strategies import formulas

a, b, c = Atom("a"), Atom("b"), Atom("c")


@pytest.mark.parametrize("text, tree", [
    ("a -> # a", Imp(a, Box(a))),
    ("false", FALSE),
    ("# a & # (a->b) -> # b", Imp(And(Box(a), Box(Imp(a, b))), Box(b))),
    ("?", HOLE),
    ("a & b v c", Or(And(a, b), c)),
    ("a -> b -> c", Imp(a, Imp(b, c))),
    ("a & b & c", And(a, And(b, c))),
    ("a v b v c", Or(a, Or(b, c))),
    ("# ~ a", Box(Not(a))),
    ("~a & b", And(Not(a), b)),
    ("*#~a", Diamond(Box(Not(a)))),
    ("a <-> b & c", Iff(a, And(b, c))),
    ("(a -> b) <-> c", Iff(Imp(a, b), c)),
    ("eureka", Atom("eureka")),
    ("va", Atom("va")),
    ("  ( ( a ) )  ", a),
])
def test_parse(text, tree):
    assert parse(text) == tree


@pytest.mark.parametrize("tree, text", [
    (Imp(Imp(Atom("A"), HOLE), Atom("A")), "(A -> ?) -> A"),
    (a, "a"),
    (Or(Or(HOLE, HOLE), Atom("A")), "(? v ?) v A"),
    (Imp(a, Imp(b, c)), "a -> (b -> c)"),
    (Or(a, Or(b, c)), "a v b v c"),
    (And(Or(a, b), c), "(a v b) & c"),
    (Box(Not(a)), "# ~ a"),
    (Not(Imp(a, b)), "~ (a -> b)"),
    (Iff(Iff(a, b), c), "(a <-> b) <-> c"),
])
def test_render(tree, text):
    assert render(tree) == text
    assert parse(text) == tree


@pytest.mark.parametrize("text, pos", [
    ("a -> (b", 7),
    ("a -> b)", 6),
    ("a $ b", 2),
    ("a ->", 4),
    ("& a", 0),
    ("a v", 3),
    ("", 0),
    ("a - b", 2),
    ("a -> b <-> c", 0),
    ("a <-> b -> c", 6),
    ("a <-> b <-> c", 8),
    ("v", 0),
    ("a b", 2),
])
def test_syntax_errors(text, pos):
    with pytest.raises(FormulaSyntaxError) as err:
        parse(text)
    assert err.value.pos == pos


@pytest.mark.parametrize("tree, expected", [
    (Not(a), Imp(a, FALSE)),
    (a, a),
    (Not(Not(a)), Imp(Imp(a, FALSE), FALSE)),
    (Box(Not(a)), Box(Imp(a, FALSE))),
])
def test_desugar_negation(tree, expected):
    assert desugar_negation(tree) == expected


@pytest.mark.parametrize("text, names", [
    ("a -> b", {"a", "b"}),
    ("false", set()),
    ("(a -> ?) -> a", {"a", "?"}),
])
def test_atoms(text, names):
    assert atoms(parse(text)) == names


def test_round_trip_seeded_sample():
    r = rng(7)
    for _ in range(2000):
        f = random_formula(r, "abc", 12, unary=(Not, Box, Diamond))
        assert parse(render(f)) == f


@given(formulas())
def test_round_trip(f):
    assert parse(render(f)) == f


@given(formulas(), formulas())
def test_render_injective(f, g):
    if f != g:
        assert render(f) != render(g)


@given(formulas())
def test_desugar_idempotent_and_atom_preserving(f):
    once = desugar_negation(f)
    assert desugar_negation(once) == once
    assert atoms(once) == atoms(f)
    assert not any(isinstance(g, Not) for g in subformulas(once))


def test_formulas_hashable_and_structural():
    assert parse("a & b") == And(a, b)
    assert len({parse("a -> b"), Imp(a, b), Imp(b, a)}) == 2
    assert Imp(a, b) != And(a, b)
