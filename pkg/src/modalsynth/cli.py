"""Command-line front end.

Exit codes: 0 success (proved / found / passed / no wrong answers),
1 negative verdict, 2 malformed input or resource cutoff.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .formula import Atom, Formula, FormulaSyntaxError, Hole, parse, render, subformulas
from .prover import Budget, DEFAULT_MAX_STEPS, IllegalConnective, prove
from .specs import BUILTIN_NAMES, LogicSpec, SpecError, builtin, load
from .synth import (
    EUREKA, Definition, DefinitionError, check_candidate, expand, preset, survey,
)

EXIT_OK, EXIT_NO, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    budget: int = DEFAULT_MAX_STEPS
    timeout: float = 60.0
    json: bool = False
    strict_hole: bool = False
    jobs: int = 1

    def __post_init__(self):
        if self.timeout <= 0:
            raise UsageError("--timeout must be positive")
        if self.budget < 1:
            raise UsageError("--budget must be at least 1")
        if self.jobs < 1:
            raise UsageError("--jobs must be at least 1")

    def proof_budget(self) -> Budget:
        return Budget(self.budget, self.timeout)


def _config(args) -> RunConfig:
    return RunConfig(args.budget, args.timeout, args.json, args.strict_hole, args.jobs)


def _emit(cfg: RunConfig, human: str, record: dict):
    print(json.dumps(record) if cfg.json else human, flush=True)


def _formula(text: str, cfg: RunConfig) -> Formula:
    try:
        f = parse(text)
    except FormulaSyntaxError as e:
        raise UsageError(str(e)) from None
    if cfg.strict_hole:
        for g in subformulas(f):
            if isinstance(g, Hole) or g == Atom(EUREKA):
                raise UsageError(f"hole constant not allowed in input (--strict-hole): {text}")
    return f


def _definition(args) -> Definition | None:
    if args.definition and args.logic:
        raise UsageError("give at most one of --def and --logic")
    try:
        if args.definition:
            return Definition.parse(args.definition)
        if args.logic:
            return preset(args.logic)
    except (DefinitionError, FormulaSyntaxError) as e:
        raise UsageError(str(e)) from None
    return None


def _expand(d: Definition | None, f: Formula) -> Formula:
    try:
        return expand(d, f)
    except DefinitionError as e:
        raise UsageError(str(e)) from None


def _spec(ref: str) -> LogicSpec:
    if ref in BUILTIN_NAMES:
        return builtin(ref)
    path = Path(ref)
    if not path.is_file():
        raise UsageError(f"{ref!r} is neither a builtin logic ({', '.join(BUILTIN_NAMES)}) nor a file")
    try:
        return load(path.read_text(encoding="utf-8"), name=path.stem)
    except SpecError as e:
        raise UsageError(f"{ref}: {e}") from None


# ----------------------------------------------------------------- commands

def cmd_prove(args) -> int:
    cfg = _config(args)
    d = _definition(args)
    f = _formula(args.formula, cfg)
    core = _expand(d, f)
    out = prove(core, cfg.proof_budget())
    human = str(out.status)
    if args.show_expansion:
        human = f"{render(core)}\n{human}"
    _emit(cfg, human, {"formula": render(f), "expansion": render(core),
                       "verdict": str(out.status), "steps": out.steps})
    if out.proved:
        return EXIT_OK
    return EXIT_NO if out.refuted else EXIT_ERROR


def cmd_expand(args) -> int:
    cfg = _config(args)
    d = _definition(args)
    core = _expand(d, _formula(args.formula, cfg))
    _emit(cfg, render(core), {"formula": args.formula, "expansion": render(core)})
    return EXIT_OK


def cmd_discover(args) -> int:
    cfg = _config(args)
    spec = _spec(args.spec)
    ops = [s.strip() for s in args.ops.split(",")]
    found = 0
    cutoffs = 0
    try:
        reports = survey(spec, args.max_size, cfg.proof_budget(), ops=ops, jobs=cfg.jobs)
        for report in reports:
            d = report.definition
            if report.passed:
                found += 1
                _emit(cfg, d.render(), {"size": d.size, "body": render(d.body)})
            elif report.cutoff:
                cutoffs += 1
                print(f"cut off: {d.render()}", file=sys.stderr)
    except DefinitionError as e:
        raise UsageError(str(e)) from None
    if cutoffs:
        print(f"{cutoffs} candidate(s) cut off by budget or timeout", file=sys.stderr)
    return EXIT_OK if found else EXIT_NO


def cmd_check(args) -> int:
    cfg = _config(args)
    spec = _spec(args.spec)
    d = _definition(args)
    if d is None:
        raise UsageError("check needs --def or --logic")
    report = check_candidate(d, spec, cfg.proof_budget(), full=True)
    n_plain = len(spec.theorems)
    for i, (f, out) in enumerate(report.theorem_verdicts):
        kind = "thm" if i < n_plain else "nec"
        ok = out.proved
        _emit(cfg, f"{'ok  ' if ok else 'FAIL'} {kind:4} {render(f)}  [{out.status}]",
              {"kind": kind, "formula": render(f), "verdict": str(out.status), "ok": ok})
    for f, out in report.nontheorem_verdicts:
        ok = out.refuted
        _emit(cfg, f"{'ok  ' if ok else 'FAIL'} nthm {render(f)}  [{out.status}]",
              {"kind": "nthm", "formula": render(f), "verdict": str(out.status), "ok": ok})
    _emit(cfg, f"{'PASS' if report.passed else 'FAIL'} {d.render()} against {spec.name}",
          {"definition": d.render(), "spec": spec.name, "passed": report.passed,
           "cutoff": report.cutoff})
    return EXIT_OK if report.passed else EXIT_NO


def read_corpus(text: str, d: Definition | None, cfg: RunConfig):
    """Parse ``+<TAB>formula`` / ``-<TAB>formula`` lines into (line, expected, source, core)."""
    problems, errors = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        if not raw.strip() or raw.lstrip().startswith(";"):
            continue
        sign, tab, body = raw.partition("\t")
        if sign not in ("+", "-") or not tab:
            errors.append(f"line {lineno}: expected '+<TAB>formula' or '-<TAB>formula'")
            continue
        try:
            f = _formula(body, cfg)
            problems.append((lineno, sign == "+", body.strip(), _expand(d, f)))
        except UsageError as e:
            errors.append(f"line {lineno}: {e}")
    return problems, errors


def _bench_one(task):
    core, budget = task
    return prove(core, budget)


def cmd_bench(args) -> int:
    cfg = _config(args)
    d = _definition(args)
    try:
        text = Path(args.corpus).read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError(str(e)) from None
    problems, errors = read_corpus(text, d, cfg)
    if errors:
        for e in errors:
            print(e, file=sys.stderr)
        return EXIT_ERROR
    tasks = [(core, cfg.proof_budget()) for *_, core in problems]
    if cfg.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            outcomes = list(pool.map(_bench_one, tasks))
    else:
        outcomes = map(_bench_one, tasks)
    totals = {"correct": 0, "wrong": 0, "timeout": 0}
    for (lineno, expected, source, _), out in zip(problems, outcomes):
        if out.cutoff:
            result = "timeout"
        elif out.proved == expected:
            result = "correct"
        else:
            result = "wrong"
        totals[result] += 1
        _emit(cfg, f"{lineno:5} {'+' if expected else '-'} {result:8} {str(out.status):16} {source}",
              {"line": lineno, "expected": "+" if expected else "-", "formula": source,
               "verdict": str(out.status), "steps": out.steps, "result": result})
    total = sum(totals.values())
    _emit(cfg, f"total {total}: {totals['correct']} correct, {totals['wrong']} wrong, "
               f"{totals['timeout']} timeout", {"total": total, **totals})
    return EXIT_OK if totals["wrong"] == 0 else EXIT_NO


# ------------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=DEFAULT_MAX_STEPS,
                        help="max prover steps per proof (default %(default)s)")
    common.add_argument("--timeout", type=float, default=60.0,
                        help="wall-clock seconds per proof (default %(default)s)")
    common.add_argument("--json", action="store_true", help="one JSON object per output line")
    common.add_argument("--strict-hole", action="store_true",
                        help="reject '?' and 'eureka' in input formulas")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    common.add_argument("--show-expansion", action="store_true",
                        help="print the expanded core formula")

    def with_def(p):
        p.add_argument("--def", dest="definition", metavar="DEF",
                       help="modal definition, e.g. '#X := (X -> ?) -> X'")
        p.add_argument("--logic", help="definition preset: iel or s4")

    parser = argparse.ArgumentParser(
        prog="modalsynth", description="G4ip prover and modal definition synthesis")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("prove", parents=[common], help="decide one formula")
    p.add_argument("formula")
    with_def(p)
    p.set_defaults(func=cmd_prove)

    p = sub.add_parser("expand", parents=[common], help="print a formula with definitions unfolded")
    p.add_argument("formula")
    with_def(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("discover", parents=[common], help="list definitions satisfying a logic")
    p.add_argument("spec_pos", nargs="?", metavar="SPEC")
    p.add_argument("size_pos", nargs="?", type=int, metavar="MAX_SIZE")
    p.add_argument("--spec", help=f"builtin ({', '.join(BUILTIN_NAMES)}) or spec file")
    p.add_argument("--max-size", type=int, default=None, help="max binary connectives (default 2)")
    p.add_argument("--ops", default="->,&,v", help="generator connectives (default %(default)s)")
    p.set_defaults(func=cmd_discover)

    p = sub.add_parser("check", parents=[common], help="report every verdict of one definition")
    p.add_argument("--spec", required=True)
    with_def(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bench", parents=[common], help="run a +/- corpus")
    p.add_argument("corpus")
    with_def(p)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "discover":
        args.spec = args.spec or args.spec_pos
        if args.spec is None:
            parser.error("discover needs a logic: --spec NAME|FILE")
        args.max_size = args.max_size if args.max_size is not None else (
            args.size_pos if args.size_pos is not None else 2)
        if args.max_size < 0:
            parser.error("--max-size must be non-negative")
    try:
        return args.func(args)
    except (UsageError, IllegalConnective) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
