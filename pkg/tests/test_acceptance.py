"""Exit criteria for the build, one test per criterion."""

import time

import pytest

from conftest import ACCEPTANCE
from modalsynth.formula import (
    FALSE, And, Atom, Box, Diamond, Iff, Imp, Not, Or, desugar_negation, parse, render,
)
from modalsynth.prover import Budget, classical_taut, prove
from modalsynth.specs import BUILTIN_NAMES, builtin, dump, effective_theorems, load
from modalsynth.synth import (
    IEL_DEFINITION, count_defs, enumerate_defs, prove_with_def, survey,
)

from oracles import all_formulas, count_definitions_formula, g3i_provable, random_formula, rng

BUDGET = Budget(10**7)
RUNTIME_LIMIT = 10.0
IEL = IEL_DEFINITION.with_hole("eureka")

# every outcome produced by criteria 1-5, inspected by criterion 6(d)
SEEN = []


@pytest.fixture
def record(request):
    key = request.node.name.removeprefix("test_")
    state = {"text": request.node.function.__doc__.strip()}
    yield state
    ACCEPTANCE[key] = (state.get("ok", False), state["text"])


def _discover(name):
    start = time.perf_counter()
    found = []
    for report in survey(builtin(name), 2, BUDGET):
        SEEN.extend(o for _, o in report.theorem_verdicts + report.nontheorem_verdicts)
        if report.passed:
            found.append(render(report.definition.body))
    return found, time.perf_counter() - start


def _checked(f):
    out = prove_with_def(IEL, f, BUDGET)
    SEEN.append(out)
    return out


def test_c1_iel_discovery(record):
    """discover iel / iel-nec / iel-strict / iel-strict-nec at size 2, exact lists, < 10 s each"""
    three = ["(A -> false) -> A", "(A -> false) -> false", "(A -> ?) -> A"]
    expected = {"iel": three, "iel-nec": three,
                "iel-strict": ["(A -> ?) -> A"], "iel-strict-nec": ["(A -> ?) -> A"]}
    for name, want in expected.items():
        found, secs = _discover(name)
        assert found == want, name
        assert secs < RUNTIME_LIMIT, (name, secs)
    record["ok"] = True


def test_c2_s4_discovery(record):
    """discover s4 starts A&?, ?&A, A&(A->?), A&(?->false); s4-nec empty; < 10 s each"""
    found, secs = _discover("s4")
    assert found[:4] == ["A & ?", "? & A", "A & (A -> ?)", "A & (? -> false)"]
    assert secs < RUNTIME_LIMIT
    found, secs = _discover("s4-nec")
    assert found == []
    assert secs < RUNTIME_LIMIT
    record["ok"] = True


def test_c3_iel_suite(record):
    """(X->eureka)->X proves 15 theorems, 30 with necessitation, refutes 6 non-theorems"""
    iel = builtin("iel")
    assert len(iel.theorems) == 15 and len(iel.nontheorems) == 6
    assert all(_checked(t).proved for t in iel.theorems)
    assert all(_checked(t).refuted for t in iel.nontheorems)
    nec = effective_theorems(builtin("iel-nec"))
    assert len(nec) == 30
    assert all(_checked(t).proved for t in nec)
    record["ok"] = True


POINTS = [
    ("#eureka <-> eureka", True),
    ("*eureka <-> ~ ~ eureka", True),
    ("#p <-> ~ # (~p)", False),
    ("*p <-> ~(*(~p))", True),
    ("~(*(~p)) -> #p", False),
    ("p -> #p", True),
    ("#p -> *p", True),
    ("*p -> ~~p", True),
]


def test_c4_point_checks(record):
    """eureka points, fixpoint checks and the p -> #p -> *p -> ~~p chain"""
    for text, proved in POINTS:
        out = _checked(parse(text))
        assert (out.proved if proved else out.refuted), text
    record["ok"] = True


def test_c5_enumeration(record):
    """count_defs 0/1/2 = 1/16/358 (closed-form oracle); size-2 listing head and tail"""
    for n, want in [(0, 1), (1, 16), (2, 358)]:
        assert count_definitions_formula(n) == want
        assert count_defs(n) == want
    bodies = [render(d.body) for d in enumerate_defs(2)]
    assert bodies[:9] == ["A", "A -> A", "A -> false", "A -> ?", "false -> A", "? -> A",
                          "A & A", "A & false", "A & ?"]
    assert bodies[-3:] == ["(? v A) v ?", "(? v false) v A", "(? v ?) v A"]
    assert "(A -> ?) -> A" in bodies
    record["ok"] = True


def test_c6a_glivenko(record):
    """~~f provable iff f classically valid on 1000 random formulas (<=3 atoms, <=8 connectives)"""
    r = rng(2019)
    agree = 0
    for _ in range(1000):
        f = random_formula(r, "abc", 8)
        out = prove(Imp(Imp(desugar_negation(f), FALSE), FALSE), BUDGET)
        assert not out.cutoff
        agree += out.proved == classical_taut(f)
    record["text"] += f" ({agree}/1000 agree)"
    assert agree == 1000
    record["ok"] = True


EXHAUSTIVE = all_formulas([Atom("a"), Atom("b")], [Imp, And, Or, Iff], 3)


def test_c6b_oracle_agreement(record):
    """prover agrees with loop-checked G3i search on all formulas over {a,b} with <=3 connectives"""
    assert len(EXHAUSTIVE) == 5394
    mismatches = [f for f in EXHAUSTIVE if prove(f, BUDGET).proved != g3i_provable(f)]
    record["text"] += f" ({len(EXHAUSTIVE) - len(mismatches)}/{len(EXHAUSTIVE)})"
    assert not mismatches
    record["ok"] = True


def test_c6c_soundness(record):
    """every formula the prover proves in the exhaustive set is a classical tautology"""
    for f in EXHAUSTIVE:
        out = prove(f, BUDGET)
        assert not out.cutoff
        if out.proved:
            assert classical_taut(f), render(f)
    record["ok"] = True


def test_c6d_no_budget_exhaustion(record):
    """no proof attempt in criteria 1-5 hit the 10^7 step budget"""
    if not SEEN:
        pytest.skip("criteria 1-5 did not run in this session")
    assert not any(o.cutoff for o in SEEN)
    record["text"] += f" ({len(SEEN)} attempts, max {max(o.steps for o in SEEN)} steps)"
    record["ok"] = True


def test_c7_round_trip(record):
    """parse(render(f)) == f on 10000 random formulas; builtin specs survive dump -> load"""
    r = rng(7)
    for _ in range(10_000):
        f = random_formula(r, "abc", 6, unary=(Not, Box, Diamond), constants=(FALSE,))
        assert parse(render(f)) == f
    for name in BUILTIN_NAMES:
        assert load(dump(builtin(name))) == builtin(name)
    record["ok"] = True
