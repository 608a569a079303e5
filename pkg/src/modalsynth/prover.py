"""Contraction-free sequent prover (G4ip) for intuitionistic propositional logic.

The search follows a fixed rule order and commits to the first context
formula whose left rule applies, so no backtracking happens across rules.
Contexts are tuples scanned newest-first.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field

import numpy as np

from .formula import (
    FALSE, UNARY, And, Atom, Box, Diamond, Falsum, Formula, Hole, Iff, Imp, Not, Or,
    atoms, subformulas,
)

DEFAULT_MAX_STEPS = 10**7
MAX_TAUT_ATOMS = 20


class IllegalConnective(ValueError):
    pass


class AtomLimit(ValueError):
    pass


class Status(enum.Enum):
    PROVED = "Proved"
    NOT_PROVED = "NotProved"
    BUDGET_EXHAUSTED = "BudgetExhausted"
    TIMEOUT = "Timeout"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Budget:
    max_steps: int = DEFAULT_MAX_STEPS
    # wall-clock seconds for a single proof attempt, None for unlimited
    timeout: float | None = None

    def __post_init__(self):
        if self.max_steps < 1:
            raise ValueError("max_steps must be positive")
        if self.timeout is not None and self.timeout <= 0:
            raise ValueError("timeout must be positive")


@dataclass(frozen=True)
class ProofOutcome:
    status: Status
    steps: int

    @property
    def proved(self) -> bool:
        return self.status is Status.PROVED

    @property
    def refuted(self) -> bool:
        return self.status is Status.NOT_PROVED

    @property
    def cutoff(self) -> bool:
        """True when the attempt stopped on a resource limit rather than a verdict."""
        return self.status in (Status.BUDGET_EXHAUSTED, Status.TIMEOUT)


@dataclass(frozen=True)
class Sequent:
    goal: Formula
    context: tuple[Formula, ...] = field(default=())


class _Cutoff(Exception):
    def __init__(self, status: Status):
        self.status = status


class _Meter:
    __slots__ = ("steps", "max_steps", "deadline")

    def __init__(self, budget: Budget):
        self.steps = 0
        self.max_steps = budget.max_steps
        self.deadline = None if budget.timeout is None else time.monotonic() + budget.timeout

    def tick(self):
        self.steps += 1
        if self.steps > self.max_steps:
            self.steps = self.max_steps
            raise _Cutoff(Status.BUDGET_EXHAUSTED)
        if self.deadline is not None and not self.steps & 1023 and time.monotonic() > self.deadline:
            raise _Cutoff(Status.TIMEOUT)


def check_core(f: Formula):
    for g in subformulas(f):
        if isinstance(g, UNARY):
            raise IllegalConnective(
                f"{type(g).__name__} must be expanded before proving: {f}")


def _prove(goal: Formula, ctx: tuple, meter: _Meter) -> bool:
    meter.tick()
    if goal in ctx or FALSE in ctx:
        return True
    kind = type(goal)
    if kind is Iff:
        return (_prove(goal.r, (goal.l,) + ctx, meter)
                and _prove(goal.l, (goal.r,) + ctx, meter))
    if kind is Imp:
        return _prove(goal.r, (goal.l,) + ctx, meter)
    if kind is And:
        return _prove(goal.l, ctx, meter) and _prove(goal.r, ctx, meter)
    for i, red in enumerate(ctx):
        if type(red) in _INERT:
            continue
        if type(red) is Imp and type(red.l) in _INERT and red.l not in ctx:
            continue  # atomic antecedent not available
        reduced = _reduce(red, goal, ctx[:i] + ctx[i + 1:], meter)
        if reduced is not None:
            return _prove(goal, reduced, meter)
    if kind is Or:
        return _prove(goal.l, ctx, meter) or _prove(goal.r, ctx, meter)
    return False


_INERT = (Atom, Falsum, Hole)


def _reduce(red: Formula, goal: Formula, rest: tuple, meter: _Meter):
    """New context after applying the left rule for ``red``, or None if it does not apply."""
    kind = type(red)
    if kind is Imp:
        return _reduce_imp(red.l, red.r, rest, meter)
    if kind is And:
        return (red.l, red.r) + rest
    if kind is Iff:
        return (Imp(red.l, red.r), Imp(red.r, red.l)) + rest
    if kind is Or:
        if _prove(goal, (red.l,) + rest, meter):
            return (red.r,) + rest
    return None


def _reduce_imp(a: Formula, b: Formula, rest: tuple, meter: _Meter):
    kind = type(a)
    if kind is Imp:
        if _prove(a, (Imp(a.r, b),) + rest, meter):
            return (b,) + rest
        return None
    if kind is And:
        return (Imp(a.l, Imp(a.r, b)),) + rest
    if kind is Or:
        return (Imp(a.l, b), Imp(a.r, b)) + rest
    if kind is Iff:
        return (Imp(Imp(a.l, a.r), Imp(Imp(a.r, a.l), b)),) + rest
    if a in rest:
        return (b,) + rest
    return None


def prove_sequent(s: Sequent, budget: Budget = Budget()) -> ProofOutcome:
    for f in (s.goal, *s.context):
        check_core(f)
    meter = _Meter(budget)
    try:
        ok = _prove(s.goal, tuple(s.context), meter)
    except _Cutoff as stop:
        return ProofOutcome(stop.status, meter.steps)
    return ProofOutcome(Status.PROVED if ok else Status.NOT_PROVED, meter.steps)


def prove(f: Formula, budget: Budget = Budget()) -> ProofOutcome:
    """Decide whether ``f`` is an intuitionistic theorem.

    ``f`` may only use ``->``, ``&``, ``v``, ``<->``, atoms, ``false`` and the
    hole; negation and modalities must be expanded first.
    """
    return prove_sequent(Sequent(f), budget)


# ------------------------------------------------------ classical semantics

def classical_taut(f: Formula) -> bool:
    """Truth-table validity of ``f``; the hole counts as one more atom."""
    names = sorted(atoms(f))
    if len(names) > MAX_TAUT_ATOMS:
        raise AtomLimit(f"{len(names)} atoms exceeds the limit of {MAX_TAUT_ATOMS}")
    rows = np.arange(1 << len(names), dtype=np.int64)
    columns = {name: ((rows >> i) & 1).astype(bool) for i, name in enumerate(names)}
    return bool(np.all(_evaluate(f, columns, len(rows))))


def _evaluate(f: Formula, columns: dict, n: int) -> np.ndarray:
    if isinstance(f, Atom):
        return columns[f.name]
    if isinstance(f, Hole):
        return columns["?"]
    if isinstance(f, Falsum):
        return np.zeros(n, dtype=bool)
    if isinstance(f, Not):
        return ~_evaluate(f.f, columns, n)
    if isinstance(f, (Box, Diamond)):
        raise IllegalConnective(f"classical_taut has no semantics for modalities: {f}")
    left = _evaluate(f.l, columns, n)
    right = _evaluate(f.r, columns, n)
    if isinstance(f, And):
        return left & right
    if isinstance(f, Or):
        return left | right
    if isinstance(f, Imp):
        return ~left | right
    return left == right
