"""Command-line front end.

Every subcommand writes machine-readable records (JSON lines or TSV) to
stdout.  Errors go to stderr as a single ``error: ...`` line with exit codes
0 ok, 2 validation, 3 budget, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from .cartan import ParabolicSubset, RootSystem, build_root_system, parse_group
from .cone import enumerate_faces
from .errors import FlagcalcError, ValidationError
from .levi import LeviQuery, format_residues, is_levi_movable, verify_levi_descent
from .schubert import Indexing, TopConstantQuery, top_constant, verify_product_formula
from .sweep import sweep_levi_descent, sweep_product_formula
from .weyl import (
    WeylElement, dual_index, factorize, format_word, is_min_rep, parse_word,
)

SUBCOMMANDS = ("factor", "constant", "levi", "verify", "faces", "dual")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ValidationError(message)


@dataclass
class RunConfig:
    command: str
    system: RootSystem
    P: ParabolicSubset
    Q: ParabolicSubset | None
    tuple: tuple[WeylElement, ...]
    word: WeylElement | None
    s: int
    fmt: str
    budget: int | None
    max_codim: int
    sweep: bool


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("-g", "--group", required=True, help="group type, e.g. A3")
    # nargs="+" also accepts an unquoted {1,3} after shell brace expansion
    p.add_argument("-P", "--parabolic", nargs="+", default=["{}"],
                   help="Delta(P) as 1-based set, e.g. {2}")
    p.add_argument("-Q", "--parabolic-q", nargs="+", default=None,
                   help="Delta(Q), must contain Delta(P)")
    p.add_argument("-t", "--tuple", default=None,
                   help='semicolon-separated words, e.g. "1 2; 1 2; 2 1"')
    p.add_argument("-w", "--word", default=None, help='a single word, e.g. "1 2 1"')
    p.add_argument("-s", "--arity", type=int, default=3)
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.add_argument("--budget", type=int, default=None,
                   help="maximum enumerated tuples (default $SCHUBERT_BUDGET or 10^7)")
    p.add_argument("--max-codim", type=int, default=1)
    p.add_argument("--indexing", choices=("codim", "cell"), default="codim",
                   help="how tuple entries index Schubert classes (default codim)")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="flagcalc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    common = _common()
    sub.add_parser("factor", parents=[common], help="w = u v coset factorization")
    sub.add_parser("constant", parents=[common], help="top structure constant c_w")
    sub.add_parser("levi", parents=[common], help="Levi-movability report")
    v = sub.add_parser("verify", parents=[common], help="check c_w = c_u c_v")
    v.add_argument("--sweep", action="store_true",
                   help="exhaustive check over all chains and tuples")
    sub.add_parser("faces", parents=[common], help="tensor-cone face descriptors")
    sub.add_parser("dual", parents=[common], help="Poincare-dual index of a word")
    return parser


def _parse_tuple(system: RootSystem, text: str, P: ParabolicSubset, indexing: str):
    parts = [p for p in text.split(";")]
    ws = tuple(parse_word(system, p) for p in parts)
    for part, w in zip(parts, ws):
        if not is_min_rep(w, P):
            raise ValidationError(f"word {part.strip()!r} is not in W^P for P={P}")
    if indexing == "cell":
        ws = tuple(dual_index(w, P) for w in ws)
    return ws


def parse_config(argv: Sequence[str]) -> RunConfig:
    args = build_parser().parse_args(argv)
    system = build_root_system(parse_group(args.group))
    P = ParabolicSubset.parse(" ".join(args.parabolic), system.rank)
    Q = None
    if args.parabolic_q is not None:
        Q = ParabolicSubset.parse(" ".join(args.parabolic_q), system.rank)
    if Q is not None and not P.issubset(Q):
        raise ValidationError(f"Delta(P)={P} is not contained in Delta(Q)={Q}")
    if args.arity < 2:
        raise ValidationError(f"arity must be at least 2, got {args.arity}")
    ws = () if args.tuple is None else _parse_tuple(system, args.tuple, P, args.indexing)
    word = None if args.word is None else parse_word(system, args.word)
    sweep = getattr(args, "sweep", False)
    cmd = args.command
    if cmd in ("factor", "dual") and word is None:
        raise ValidationError(f"{cmd} requires -w/--word")
    if cmd == "factor" and Q is None:
        raise ValidationError("factor requires -Q/--parabolic-q")
    if cmd in ("constant", "levi") and not ws:
        raise ValidationError(f"{cmd} requires -t/--tuple")
    if cmd == "verify" and not sweep and (not ws or Q is None):
        raise ValidationError("verify requires -t and -Q, or --sweep")
    return RunConfig(cmd, system, P, Q, ws, word, args.arity, args.format,
                     args.budget, args.max_codim, sweep)


def _tsv_cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return ""
    if isinstance(v, dict):
        return ",".join(f"{k}={_tsv_cell(x)}" for k, x in v.items())
    if isinstance(v, (list, tuple)):
        return ";".join(_tsv_cell(x) for x in v)
    return str(v)


def render(records: list[dict], fmt: str) -> str:
    if fmt == "json":
        return "".join(json.dumps(r, separators=(", ", ": ")) + "\n" for r in records)
    if not records:
        return ""
    lines = ["\t".join(records[0].keys())]
    lines += ["\t".join(_tsv_cell(v) for v in r.values()) for r in records]
    return "\n".join(lines) + "\n"


def _words(ws) -> list[str]:
    return [format_word(w.word) for w in ws]


def run(cfg: RunConfig) -> tuple[list[dict], int]:
    """Execute a validated config; returns records and the exit code."""
    system, P, Q = cfg.system, cfg.P, cfg.Q
    if cfg.command == "factor":
        f = factorize(cfg.word, P, Q)
        return [{
            "group": system.label, "P": str(P), "Q": str(Q),
            "w": format_word(f.w.word), "u": format_word(f.u.word), "v": format_word(f.v.word),
            "length_w": f.w.length, "length_u": f.u.length, "length_v": f.v.length,
        }], 0
    if cfg.command == "dual":
        d = dual_index(cfg.word, P)
        return [{
            "group": system.label, "P": str(P), "w": format_word(cfg.word.word),
            "dual": format_word(d.word), "length_w": cfg.word.length, "length_dual": d.length,
        }], 0
    if cfg.command == "constant":
        c = top_constant(TopConstantQuery(cfg.tuple, P))
        return [{
            "group": system.label, "P": str(P), "tuple": _words(cfg.tuple),
            "c_w": c, "indexing": Indexing.CODIM.value,
        }], 0
    if cfg.command == "levi":
        if Q is not None:
            return [verify_levi_descent(cfg.tuple, P, Q).record()], 0
        report = is_levi_movable(LeviQuery(cfg.tuple, P))
        return [{
            "group": system.label, "P": str(P), "tuple": _words(cfg.tuple),
            "c_w": report.c, "residues": format_residues(report.residues),
            "movable_w": report.movable, "indexing": Indexing.CODIM.value,
        }], 0
    if cfg.command == "verify":
        if cfg.sweep:
            summaries = [
                sweep_product_formula(system, cfg.s, cfg.budget),
                sweep_levi_descent(system, cfg.s, cfg.budget),
            ]
            records = []
            for sm in summaries:
                rec = sm.record()
                rec["summary"] = f"checked {sm.checked} tuples, {len(sm.violations)} violations"
                records.append(rec)
            checked = sum(sm.checked for sm in summaries)
            bad = sum(len(sm.violations) for sm in summaries)
            records.append({
                "group": system.label, "check": "total", "s": cfg.s,
                "checked": checked, "violations": bad,
                "summary": f"checked {checked} tuples, {bad} violations",
            })
            return records, (4 if bad else 0)
        report = verify_product_formula(cfg.tuple, P, Q)
        return [report.record()], (0 if report.holds else 4)
    if cfg.command == "faces":
        return [d.record() for d in enumerate_faces(system, cfg.s, cfg.max_codim, cfg.budget)], 0
    raise ValidationError(f"unknown subcommand {cfg.command!r}")


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        cfg = parse_config(argv)
        records, code = run(cfg)
    except FlagcalcError as exc:
        msg = " ".join(str(exc).split())
        print(f"error: {msg}", file=sys.stderr)
        return exc.exit_code
    sys.stdout.write(render(records, cfg.fmt))
    if code == 4:
        print("error: invariant violations found", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
