"""Propositional formulas with two modal connectives.

Concrete syntax, loosest binding first::

    A <-> B      non-associative; mixing with an unparenthesized -> is rejected
    A -> B       right-associative
    A v B        right-associative
    A & B        right-associative
    ~A  #A  *A   prefix, freely stacked

Leaves are identifiers, the constant ``false`` and the hole constant ``?``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Union


class Formula:
    __slots__ = ()

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True, slots=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True, slots=True)
class Falsum(Formula):
    pass


@dataclass(frozen=True, slots=True)
class Hole(Formula):
    pass


@dataclass(frozen=True, slots=True)
class Not(Formula):
    f: Formula


@dataclass(frozen=True, slots=True)
class Box(Formula):
    f: Formula


@dataclass(frozen=True, slots=True)
class Diamond(Formula):
    f: Formula


@dataclass(frozen=True, slots=True)
class And(Formula):
    l: Formula
    r: Formula


@dataclass(frozen=True, slots=True)
class Or(Formula):
    l: Formula
    r: Formula


@dataclass(frozen=True, slots=True)
class Imp(Formula):
    l: Formula
    r: Formula


@dataclass(frozen=True, slots=True)
class Iff(Formula):
    l: Formula
    r: Formula


FALSE = Falsum()
HOLE = Hole()

LEAVES = (Atom, Falsum, Hole)
UNARY = (Not, Box, Diamond)
BINARY = (And, Or, Imp, Iff)

Unary = Union[Not, Box, Diamond]
Binary = Union[And, Or, Imp, Iff]

HOLE_NAME = "?"
KEYWORDS = frozenset({"false", "v"})

PREFIX_SYMBOL = {Not: "~", Box: "#", Diamond: "*"}
INFIX_SYMBOL = {And: "&", Or: "v", Imp: "->", Iff: "<->"}
SYMBOL_TO_BINARY = {s: c for c, s in INFIX_SYMBOL.items()}


class FormulaSyntaxError(ValueError):
    """Malformed formula text; ``pos`` is the 0-based offset of the offending token."""

    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


# ---------------------------------------------------------------- traversal

def subformulas(f: Formula) -> Iterator[Formula]:
    """Pre-order walk over every node of ``f``."""
    stack = [f]
    while stack:
        g = stack.pop()
        yield g
        if isinstance(g, BINARY):
            stack.append(g.r)
            stack.append(g.l)
        elif isinstance(g, UNARY):
            stack.append(g.f)


def atoms(f: Formula) -> set[str]:
    """Distinct atom names in ``f``; the hole constant is reported as ``"?"``."""
    out = set()
    for g in subformulas(f):
        if isinstance(g, Atom):
            out.add(g.name)
        elif isinstance(g, Hole):
            out.add(HOLE_NAME)
    return out


def connectives(f: Formula) -> int:
    return sum(1 for g in subformulas(f) if not isinstance(g, LEAVES))


def desugar_negation(f: Formula) -> Formula:
    """Replace every ``~A`` by ``A -> false``."""
    if isinstance(f, LEAVES):
        return f
    if isinstance(f, Not):
        return Imp(desugar_negation(f.f), FALSE)
    if isinstance(f, UNARY):
        return type(f)(desugar_negation(f.f))
    return type(f)(desugar_negation(f.l), desugar_negation(f.r))


def substitute(f: Formula, mapping: dict[Formula, Formula]) -> Formula:
    """Simultaneously replace leaves found in ``mapping``; replacements are not revisited."""
    if isinstance(f, LEAVES):
        return mapping.get(f, f)
    if isinstance(f, UNARY):
        return type(f)(substitute(f.f, mapping))
    return type(f)(substitute(f.l, mapping), substitute(f.r, mapping))


# ------------------------------------------------------------------ parsing

_TOKEN = re.compile(r"\s*(?:(<->|->|[~#*&()?])|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text: str) -> list[tuple[str, int]]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        sym, ident, bad = m.groups()
        start = m.start(m.lastindex)
        if bad is not None:
            raise FormulaSyntaxError(f"unknown token {bad!r}", text, start)
        toks.append((sym or ident, start))
        pos = m.end()
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> str | None:
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def pos(self) -> int:
        return self.toks[self.i][1] if self.i < len(self.toks) else len(self.text)

    def fail(self, message: str):
        raise FormulaSyntaxError(message, self.text, self.pos())

    def take(self) -> str:
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self) -> Formula:
        if not self.toks:
            self.fail("empty formula")
        f, _ = self.iff()
        if self.peek() is not None:
            if self.peek() == ")":
                self.fail("unbalanced ')'")
            self.fail(f"unexpected token {self.peek()!r}")
        return f

    # Each level returns (formula, bare_imp): bare_imp marks an unparenthesized ->.
    def iff(self) -> tuple[Formula, bool]:
        at = self.pos()
        left, bare = self.imp()
        if self.peek() == "<->":
            if bare:
                raise FormulaSyntaxError("'->' next to '<->' needs parentheses", self.text, at)
            self.take()
            at = self.pos()
            right, bare = self.imp()
            if bare:
                raise FormulaSyntaxError("'->' next to '<->' needs parentheses", self.text, at)
            if self.peek() == "<->":
                self.fail("'<->' is non-associative; add parentheses")
            return Iff(left, right), False
        return left, bare

    def imp(self) -> tuple[Formula, bool]:
        left = self.binary("v", self.conj)
        if self.peek() == "->":
            self.take()
            right, _ = self.imp()
            return Imp(left, right), True
        return left, False

    def binary(self, sym: str, sub) -> Formula:
        left = sub()
        if self.peek() == sym:
            self.take()
            return SYMBOL_TO_BINARY[sym](left, self.binary(sym, sub))
        return left

    def conj(self) -> Formula:
        return self.binary("&", self.unary)

    def unary(self) -> Formula:
        tok = self.peek()
        if tok == "~":
            self.take()
            return Not(self.unary())
        if tok == "#":
            self.take()
            return Box(self.unary())
        if tok == "*":
            self.take()
            return Diamond(self.unary())
        return self.primary()

    def primary(self) -> Formula:
        tok = self.peek()
        if tok is None:
            self.fail("formula ends where an operand was expected")
        if tok == "(":
            self.take()
            f, _ = self.iff()
            if self.peek() != ")":
                self.fail("expected ')'")
            self.take()
            return f
        if tok == "?":
            self.take()
            return HOLE
        if tok == "false":
            self.take()
            return FALSE
        if tok[0].isalpha() or tok[0] == "_":
            if tok == "v":
                self.fail("dangling 'v'")
            self.take()
            return Atom(tok)
        self.fail(f"dangling {tok!r}")


def parse(text: str) -> Formula:
    """Parse one formula; raises FormulaSyntaxError with the failing position."""
    return _Parser(text).parse()


# ---------------------------------------------------------------- rendering

_LEVEL = {Iff: 1, Imp: 2, Or: 3, And: 4}
_ATOMIC = 6
_PREFIX = 5


def _level(f: Formula) -> int:
    if isinstance(f, BINARY):
        return _LEVEL[type(f)]
    if isinstance(f, UNARY):
        return _PREFIX
    return _ATOMIC


def _wrap(f: Formula, parens: bool) -> str:
    s = render(f)
    return f"({s})" if parens else s


def render(f: Formula) -> str:
    """Text form of ``f`` that parses back to the same tree.

    Parentheses are kept to a minimum, except that an implication nested on
    the right of another implication is always bracketed for readability.
    """
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Falsum):
        return "false"
    if isinstance(f, Hole):
        return HOLE_NAME
    if isinstance(f, UNARY):
        return f"{PREFIX_SYMBOL[type(f)]} {_wrap(f.f, _level(f.f) < _PREFIX)}"
    lv = _LEVEL[type(f)]
    if lv <= 2:
        left = _wrap(f.l, _level(f.l) <= 2)
        right = _wrap(f.r, _level(f.r) <= 2)
    else:
        left = _wrap(f.l, _level(f.l) <= lv)
        right = _wrap(f.r, _level(f.r) < lv)
    return f"{left} {INFIX_SYMBOL[type(f)]} {right}"
