"""Intuitionistic G4ip prover and modal-definition synthesis."""

from .formula import (
    Atom, And, Box, Diamond, FALSE, Falsum, Formula, FormulaSyntaxError, HOLE, Hole, Iff,
    Imp, Not, Or, atoms, desugar_negation, parse, render,
)
from .prover import (
    AtomLimit, Budget, IllegalConnective, ProofOutcome, Sequent, Status, classical_taut,
    prove, prove_sequent,
)
from .specs import LogicSpec, OverlapError, UnknownSpec, builtin, effective_theorems, load
from .synth import (
    CandidateReport, Definition, check_candidate, count_defs, discover, enumerate_defs,
    expand, prove_with_def,
)

__version__ = "0.1.0"

__all__ = [
    "Atom", "And", "Box", "Diamond", "FALSE", "Falsum", "Formula", "FormulaSyntaxError",
    "HOLE", "Hole", "Iff", "Imp", "Not", "Or", "atoms", "desugar_negation", "parse", "render",
    "AtomLimit", "Budget", "IllegalConnective", "ProofOutcome", "Sequent", "Status",
    "classical_taut", "prove", "prove_sequent",
    "LogicSpec", "OverlapError", "UnknownSpec", "builtin", "effective_theorems", "load",
    "CandidateReport", "Definition", "check_candidate", "count_defs", "discover",
    "enumerate_defs", "expand", "prove_with_def",
]
