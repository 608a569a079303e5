"""Logic specifications: theorems that must hold, non-theorems that must fail.

Text format, one directive per line, ``;`` starts a comment::

    logic iel
    necessitation: off
    thm: a -> # a
    nthm: # a -> a
"""

from __future__ import annotations

from dataclasses import dataclass

from .formula import Box, Formula, FormulaSyntaxError, parse, render


class SpecError(ValueError):
    pass


class SpecSyntaxError(SpecError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class OverlapError(SpecError):
    def __init__(self, overlap: list[Formula]):
        super().__init__("formulas listed as both theorem and non-theorem: "
                         + "; ".join(render(f) for f in overlap))
        self.overlap = overlap


class UnknownSpec(SpecError, KeyError):
    pass


def _dedup(fs) -> tuple[Formula, ...]:
    return tuple(dict.fromkeys(fs))


@dataclass(frozen=True)
class LogicSpec:
    name: str
    theorems: tuple[Formula, ...]
    nontheorems: tuple[Formula, ...]
    necessitation: bool = False

    def __post_init__(self):
        object.__setattr__(self, "theorems", _dedup(self.theorems))
        object.__setattr__(self, "nontheorems", _dedup(self.nontheorems))
        overlap = [f for f in self.theorems if f in set(self.nontheorems)]
        if overlap:
            raise OverlapError(overlap)


def effective_theorems(spec: LogicSpec) -> list[Formula]:
    """Theorems, then ``#T`` for each theorem ``T`` when necessitation is on."""
    out = list(spec.theorems)
    if spec.necessitation:
        out += [Box(t) for t in spec.theorems]
    return out


IEL_THEOREMS = [
    "a -> # a",
    "# (a->b)->(# a-> # b)",
    "# p <-> # # p",
    "# a -> ~ ~ a",
    "#   (a & b) <-> (# a & # b)",
    "~ # false",
    "~ (# a & ~ a)",
    "~a -> ~ # a",
    " ~ ~ (# a -> a)",
    "# a & # (a->b) -> # b",
    "* (a & b) <-> (* a & * b)",
    "# a -> * a",
    "# a v # b -> # (a v b) ",
    "* a <-> * * a",
    "a -> *a",
]

# source lists "# a" and "~ (# a)" twice; dedup keeps the first occurrence
IEL_NONTHEOREMS = [
    "# a -> a",
    "# (a v b) -> # a v # b",
    "# a",
    "~ (# a)",
    "# false",
    "# a",
    "~ (# a)",
    "* false",
]

IEL_COLLAPSE = "* a <-> # a"

S4_THEOREMS = [
    "# a -> a",
    "# (a->b) -> (# a -> # b)",
    "# a -> # # a",
    "* * a <-> * a",
    "a -> * a",
    "# a -> * a",
    "# a v # b -> # (a v b)",
    "# (a v b) -> # a v # b",
]

S4_NONTHEOREMS = [
    "# a",
    "~ (# a)",
    "# false",
    "* false",
    "* a -> # * a",
    "a -> # a",
    "* a -> a",
    "# a <-> ?",
    "* a <-> ?",
]


def _build(name, thms, nthms, nec) -> LogicSpec:
    return LogicSpec(name, tuple(map(parse, thms)), tuple(map(parse, nthms)), nec)


_BUILTINS = {
    "iel": (IEL_THEOREMS, IEL_NONTHEOREMS),
    "iel-strict": (IEL_THEOREMS, IEL_NONTHEOREMS + [IEL_COLLAPSE]),
    "s4": (S4_THEOREMS, S4_NONTHEOREMS),
}

BUILTIN_NAMES = ("iel", "iel-nec", "iel-strict", "iel-strict-nec", "s4", "s4-nec")


def builtin(name: str) -> LogicSpec:
    if name not in BUILTIN_NAMES:
        raise UnknownSpec(f"unknown logic {name!r}; builtins are {', '.join(BUILTIN_NAMES)}")
    base = name.removesuffix("-nec")
    thms, nthms = _BUILTINS[base]
    return _build(name, thms, nthms, name.endswith("-nec"))


def load(text: str, name: str = "unnamed") -> LogicSpec:
    thms, nthms = [], []
    nec = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split(";", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        if not sep:
            head, _, rest = line.partition(" ")
            if head != "logic" or not rest.strip():
                raise SpecSyntaxError(f"unrecognised line {raw!r}", lineno)
            name = rest.strip()
            continue
        key, value = key.strip(), value.strip()
        if key in ("thm", "nthm"):
            try:
                f = parse(value)
            except FormulaSyntaxError as e:
                raise SpecSyntaxError(str(e), lineno) from None
            (thms if key == "thm" else nthms).append(f)
        elif key == "necessitation":
            if value not in ("on", "off"):
                raise SpecSyntaxError(f"necessitation must be on or off, got {value!r}", lineno)
            nec = value == "on"
        else:
            raise SpecSyntaxError(f"unknown directive {key!r}", lineno)
    return LogicSpec(name, tuple(thms), tuple(nthms), nec)


def dump(spec: LogicSpec) -> str:
    lines = [f"logic {spec.name}", f"necessitation: {'on' if spec.necessitation else 'off'}"]
    lines += [f"thm: {render(f)}" for f in spec.theorems]
    lines += [f"nthm: {render(f)}" for f in spec.nontheorems]
    return "\n".join(lines) + "\n"
