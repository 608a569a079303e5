"""Candidate definitions for the ``#`` modality and the generate-and-filter loop.

A definition ``#X := body`` turns every modal formula into a plain
intuitionistic one: ``#A`` becomes ``body`` with ``X`` replaced by ``A``,
``*A`` abbreviates ``~#~A`` and ``~A`` abbreviates ``A -> false``.
Candidates are enumerated smallest first and kept when the prover accepts
every theorem of a logic and rejects every non-theorem.
"""

from __future__ import annotations

import itertools
import logging
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .formula import (
    BINARY, FALSE, HOLE, LEAVES, SYMBOL_TO_BINARY, And, Atom, Box, Diamond,
    Formula, Imp, Not, Or, connectives, parse, render, subformulas, substitute,
)
from .prover import Budget, ProofOutcome, prove
from .specs import LogicSpec, effective_theorems

log = logging.getLogger(__name__)

DEFAULT_OPS = (Imp, And, Or)
DEFAULT_CONSTANTS = (FALSE, HOLE)
DEFAULT_VAR = "A"


class DefinitionError(ValueError):
    pass


@dataclass(frozen=True)
class Definition:
    """``#var := body``. Atoms of ``body`` other than ``var`` act as constants."""

    body: Formula
    var: str = DEFAULT_VAR

    def __post_init__(self):
        leaves = [g for g in subformulas(self.body) if isinstance(g, LEAVES)]
        if Atom(self.var) not in leaves:
            raise DefinitionError(f"definition body never mentions {self.var}: {render(self.body)}")
        for g in subformulas(self.body):
            if isinstance(g, (Box, Diamond)):
                raise DefinitionError(f"definition body may not use modalities: {render(self.body)}")

    @property
    def size(self) -> int:
        return connectives(self.body)

    def apply(self, arg: Formula) -> Formula:
        return substitute(self.body, {Atom(self.var): arg})

    def with_hole(self, name: str) -> Definition:
        """Same definition with the hole constant replaced by the atom ``name``."""
        return Definition(substitute(self.body, {HOLE: Atom(name)}), self.var)

    def render(self) -> str:
        return f"#{self.var} := {render(self.body)}"

    def __str__(self):
        return self.render()

    @classmethod
    def parse(cls, text: str) -> Definition:
        m = re.fullmatch(r"\s*#\s*([A-Za-z_][A-Za-z0-9_]*)\s*:=(.*)", text, re.S)
        if m is None:
            raise DefinitionError(f"expected '#X := <formula>', got {text!r}")
        return cls(parse(m.group(2)), m.group(1))


IEL_DEFINITION = Definition.parse("#A := (A -> ?) -> A")
EUREKA = "eureka"

# definitions selectable by logic name
PRESETS = {
    "iel": IEL_DEFINITION.with_hole(EUREKA),
    "s4": Definition.parse("#A := ? & A"),
}


def preset(name: str) -> Definition:
    try:
        return PRESETS[name]
    except KeyError:
        raise DefinitionError(
            f"no definition preset for {name!r}; choose from {sorted(PRESETS)}") from None


# -------------------------------------------------------------- enumeration

_SLOT = None


def _trees(n: int, ops: Sequence[type]) -> Iterator[tuple[object, int]]:
    # Depth-first over (tree, unused size): a leaf first, then each operator
    # with every left subtree followed by every right subtree that fits.
    yield _SLOT, n
    if n > 0:
        for op in ops:
            for left, k in _trees(n - 1, ops):
                for right, m in _trees(k, ops):
                    yield (op, left, right), m


def _count_slots(tree) -> int:
    if tree is _SLOT:
        return 1
    return _count_slots(tree[1]) + _count_slots(tree[2])


def _fill(tree, leaves: Iterator[Formula]) -> Formula:
    if tree is _SLOT:
        return next(leaves)
    op, left, right = tree
    lf = _fill(left, leaves)
    return op(lf, _fill(right, leaves))


def _as_op(op) -> type:
    if isinstance(op, str):
        try:
            return SYMBOL_TO_BINARY[op]
        except KeyError:
            raise DefinitionError(f"unknown operator {op!r}") from None
    if op not in BINARY:
        raise DefinitionError(f"not a binary connective: {op!r}")
    return op


def enumerate_defs(max_size: int, ops: Iterable = DEFAULT_OPS,
                   constants: Iterable[Formula] = DEFAULT_CONSTANTS,
                   var: str = DEFAULT_VAR) -> Iterator[Definition]:
    """Every definition with at most ``max_size`` binary connectives.

    Sizes ascend. Within one size the trees come in depth-first order (root
    operator, then left subtree, then right subtree), and for each tree the
    leaf assignments run over ``(var, *constants)`` with the rightmost leaf
    varying fastest. Assignments without ``var`` are skipped.
    """
    ops = tuple(_as_op(op) for op in ops)
    x = Atom(var)
    choices = (x, *constants)
    for size in range(max_size + 1):
        for tree, unused in _trees(size, ops):
            if unused:
                continue
            for leaves in itertools.product(choices, repeat=_count_slots(tree)):
                if x in leaves:
                    yield Definition(_fill(tree, iter(leaves)), var)


def count_defs(max_size: int, ops: Iterable = DEFAULT_OPS,
               constants: Iterable[Formula] = DEFAULT_CONSTANTS) -> int:
    return sum(1 for _ in enumerate_defs(max_size, ops, constants))


# ---------------------------------------------------------------- expansion

def expand(d: Definition | None, f: Formula) -> Formula:
    """Rewrite ``f`` into the core language using ``d`` for ``#``.

    With ``d`` None only negation and ``*`` over formulas without ``#`` can be
    expanded.
    """
    if isinstance(f, LEAVES):
        return f
    if isinstance(f, Not):
        return Imp(expand(d, f.f), FALSE)
    if isinstance(f, Diamond):
        return expand(d, Not(Box(Not(f.f))))
    if isinstance(f, Box):
        if d is None:
            raise DefinitionError(f"'#' needs a definition to expand: {render(f)}")
        return expand(d, d.apply(f.f))
    return type(f)(expand(d, f.l), expand(d, f.r))


def prove_with_def(d: Definition | None, f: Formula, budget: Budget = Budget()) -> ProofOutcome:
    return prove(expand(d, f), budget)


# ---------------------------------------------------------------- filtering

@dataclass
class CandidateReport:
    definition: Definition
    theorem_verdicts: list[tuple[Formula, ProofOutcome]] = field(default_factory=list)
    nontheorem_verdicts: list[tuple[Formula, ProofOutcome]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (all(o.proved for _, o in self.theorem_verdicts)
                and all(o.refuted for _, o in self.nontheorem_verdicts))

    @property
    def cutoff(self) -> bool:
        """Some verdict hit a step budget or timeout; such a candidate never passes."""
        return any(o.cutoff for _, o in self.theorem_verdicts + self.nontheorem_verdicts)

    def failures(self) -> list[tuple[str, Formula, ProofOutcome]]:
        out = [("thm", f, o) for f, o in self.theorem_verdicts if not o.proved]
        out += [("nthm", f, o) for f, o in self.nontheorem_verdicts if not o.refuted]
        return out


def check_candidate(d: Definition, spec: LogicSpec, budget: Budget = Budget(),
                    full: bool = False) -> CandidateReport:
    """Run ``spec`` against ``d``; stops at the first failure unless ``full``."""
    report = CandidateReport(d)
    for f in effective_theorems(spec):
        out = prove_with_def(d, f, budget)
        report.theorem_verdicts.append((f, out))
        if not out.proved and not full:
            return report
    for f in spec.nontheorems:
        out = prove_with_def(d, f, budget)
        report.nontheorem_verdicts.append((f, out))
        if not out.refuted and not full:
            return report
    return report


def _check(args) -> CandidateReport:
    return check_candidate(*args)


def survey(spec: LogicSpec, max_size: int, budget: Budget = Budget(), ops=DEFAULT_OPS,
           constants=DEFAULT_CONSTANTS, jobs: int = 1) -> Iterator[CandidateReport]:
    """Reports for every candidate up to ``max_size``, in enumeration order."""
    work = ((d, spec, budget) for d in enumerate_defs(max_size, ops, constants))
    if jobs <= 1:
        yield from map(_check, work)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(_check, work, chunksize=16)


def discover(spec: LogicSpec, max_size: int, budget: Budget = Budget(), ops=DEFAULT_OPS,
             constants=DEFAULT_CONSTANTS, jobs: int = 1) -> list[Definition]:
    found = []
    for report in survey(spec, max_size, budget, ops, constants, jobs):
        if report.passed:
            found.append(report.definition)
        elif report.cutoff:
            log.warning("candidate %s cut off by resource limits", report.definition)
    return found
