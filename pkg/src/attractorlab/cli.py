"""Command-line entry point: ``attractorlab <subcommand> ...``.

Exit codes: 0 success / valid, 1 invalid attractor or failed computation,
2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import experiments as ex
from .attractor import AttractorSet, BudgetExceeded, min_attractor_exact, verify
from .lazy import lazy_run
from .lz import VariantFlags, lz_factorize
from .text import as_text, complexity_profile
from .words import WORDSPEC_GRAMMAR, WordSpecError, parse_wordspec

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def read_input(spec: str) -> str:
    """Resolve a word spec, ``file:<path>`` or ``-`` (standard input) to a text."""
    if spec == "-":
        return as_text(sys.stdin.buffer.read())
    if spec.startswith("file:"):
        try:
            with open(spec[5:], "rb") as fh:
                return as_text(fh.read())
        except OSError as e:
            raise UsageError(str(e)) from None
    try:
        return parse_wordspec(spec).build()
    except WordSpecError as e:
        raise UsageError(str(e)) from None


def parse_scope(k: int) -> Optional[int]:
    if k < 0:
        raise UsageError("--k must be >= 0 (0 = unbounded)")
    return None if k == 0 else k


def parse_int_list(s: str) -> list[int]:
    """``3,4,5`` or ``3..8``."""
    try:
        if ".." in s:
            a, b = s.split("..")
            return list(range(int(a), int(b) + 1))
        return [int(x) for x in s.split(",") if x]
    except ValueError:
        raise UsageError(f"expected an integer list like 3,4 or 3..8, got {s!r}") from None


def emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def cmd_gen(args) -> int:
    t = read_input(args.spec)
    if not args.stats:
        emit(t, args.out)
        return EXIT_OK
    prof = complexity_profile(t)
    record = {
        "text": t,
        "length": len(t),
        "distinct_counts": list(prof.counts),
        "delta": str(prof.delta),
    }
    if args.format == "json":
        emit(json.dumps(record, indent=2), args.out)
    else:
        lines = [t, f"length: {len(t)}", f"delta: {prof.delta} ({float(prof.delta):.4f})"]
        lines.append("d_l: " + " ".join(map(str, prof.counts[:args.max_l])))
        emit("\n".join(lines), args.out)
    return EXIT_OK


def cmd_lazy(args) -> int:
    t = read_input(args.spec)
    k = parse_scope(args.k)
    if args.sharp and k is None:
        raise UsageError("--sharp needs --k >= 1")
    trace = lazy_run(t, k, args.sharp, record_steps=args.format == "csv")
    if args.format == "json":
        record = trace.summary()
        record["n"] = len(t)
        record["triggers"] = [
            {"marking": m, "start": s, "end": e, "content": t[s - 1:e]}
            for m, (s, e) in zip(trace.markings, trace.triggers)
        ]
        emit(json.dumps(record, indent=2), args.out)
    elif args.format == "csv":
        rows = ["step,marked,window_start,window_end,novel"]
        rows.extend(
            f"{s.position},{int(s.marked)},{s.window_start},{s.window_end},{int(s.novel)}" for s in trace.steps
        )
        emit("\n".join(rows), args.out)
    else:
        scope = "unbounded" if k is None else str(k)
        emit(
            f"n: {len(t)}\nk: {scope}\nsharp: {args.sharp}\ncost: {trace.cost}\n"
            f"markings: {','.join(map(str, trace.markings))}",
            args.out,
        )
    return EXIT_OK


def cmd_lz(args) -> int:
    t = read_input(args.spec)
    f = lz_factorize(t, VariantFlags(args.self_ref, args.novel))
    if args.format == "json":
        emit(json.dumps({"phrases": f.records(), "count": len(f), "z": f.z}, indent=2), args.out)
    elif args.format == "csv":
        lines = ["start,length,source"]
        lines.extend(f"{p.start},{p.length},{'' if p.source_start is None else p.source_start}" for p in f)
        emit("\n".join(lines), args.out)
    else:
        emit(f"{f.describe()}\nphrases: {len(f)}\nz: {f.z}", args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    t = read_input(args.spec)
    k = parse_scope(args.k)
    if args.sharp and k is None:
        raise UsageError("--sharp needs --k >= 1")
    try:
        a = AttractorSet.parse(args.gamma, k, args.sharp)
        report = verify(t, a)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if args.format == "json":
        emit(json.dumps(report.record(), indent=2), args.out)
    elif report.valid:
        emit("valid", args.out)
    else:
        occ = ",".join(map(str, report.witness_occurrences))
        emit(f"invalid: {report.witness!r} is not covered (occurrences {occ})", args.out)
    return EXIT_OK if report.valid else EXIT_INVALID


def cmd_minattr(args) -> int:
    t = read_input(args.spec)
    k = parse_scope(args.k)
    if args.sharp and k is None:
        raise UsageError("--sharp needs --k >= 1")
    try:
        res = min_attractor_exact(t, k, args.sharp, max_n=args.max_n)
    except BudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    check = verify(t, res.attractor)
    if not check.valid:
        raise AssertionError(f"solver witness failed verification: {check.witness!r}")
    if args.format == "json":
        emit(json.dumps({"size": res.size, "positions": list(res.attractor.positions)}), args.out)
    else:
        emit(f"size: {res.size}\npositions: {res.attractor}", args.out)
    return EXIT_OK


def _family(s: str) -> tuple[str, Optional[list[int]]]:
    if s == "fib":
        return "fibonacci", None
    if s == "tm":
        return "thue_morse", None
    if s.startswith("sturmian:"):
        return "sturmian", parse_int_list(s.split(":", 1)[1])
    raise UsageError(f"family must be fib, tm or sturmian:<q0,q1,...>, got {s!r}")


def cmd_experiment(args) -> int:
    try:
        if args.name == "families":
            family, directive = _family(args.family)
            m_values = range(args.m_min, args.m_max + 1)
            if directive is not None and args.m_max > len(directive):
                raise UsageError(f"directive has {len(directive)} entries, need {args.m_max}")
            report = ex.experiment_families(family, m_values, directive, max_n=args.max_n)
        elif args.name == "lowerbound":
            report = ex.experiment_lowerbound(args.k, parse_int_list(args.sigma), args.sharp, max_n=args.max_n)
        elif args.name == "debruijn":
            report = ex.experiment_debruijn(args.p, args.sigma)
        elif args.name == "palindromes":
            directive = parse_int_list(args.directive)
            if args.m > len(directive):
                raise UsageError(f"directive has {len(directive)} entries, need {args.m}")
            report = ex.experiment_palindromes(directive, args.m)
        else:  # equivalence
            report = ex.experiment_equivalence(args.count, args.seed, max_n=args.max_n)
    except ex.ResourceLimit as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as e:
        raise UsageError(str(e)) from None
    emit(report.render(args.format), args.out)
    if args.name == "equivalence" and report.summary["mismatches"]:
        return EXIT_INVALID
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "csv", "json"), default="table")
    common.add_argument("--out", help="write output to this path instead of stdout")

    scope = argparse.ArgumentParser(add_help=False)
    scope.add_argument("--k", type=int, default=0, help="attractor scope; 0 = unbounded")
    scope.add_argument("--sharp", action="store_true", help="only substrings of length exactly k")

    parser = argparse.ArgumentParser(
        prog="attractorlab",
        description="Online string attractors, Lempel-Ziv variants and word families.",
        epilog=WORDSPEC_GRAMMAR,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="print a generated word")
    p.add_argument("spec")
    p.add_argument("--stats", action="store_true", help="add length and complexity profile")
    p.add_argument("--max-l", type=int, default=20, help="profile entries shown in table output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("lazy", parents=[common, scope], help="run the Lazy online algorithm")
    p.add_argument("spec")
    p.set_defaults(func=cmd_lazy)

    p = sub.add_parser("lz", parents=[common], help="Lempel-Ziv factorization")
    p.add_argument("spec")
    p.add_argument("--self-ref", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--novel", action=argparse.BooleanOptionalAction, default=True)
    p.set_defaults(func=cmd_lz)

    p = sub.add_parser("verify", parents=[common, scope], help="verify an attractor")
    p.add_argument("spec")
    p.add_argument("--gamma", required=True, help="comma-separated 1-based positions")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("minattr", parents=[common, scope], help="exact minimum attractor")
    p.add_argument("spec")
    p.add_argument("--max-n", type=int, default=64)
    p.set_defaults(func=cmd_minattr)

    p = sub.add_parser("experiment", help="reproduce cost and competitive-ratio experiments")
    esub = p.add_subparsers(dest="name", required=True)
    e = esub.add_parser("families", parents=[common])
    e.add_argument("--family", default="fib", help="fib, tm or sturmian:<q0,q1,...>")
    e.add_argument("--m-min", type=int, default=3)
    e.add_argument("--m-max", type=int, default=10)
    e.add_argument("--max-n", type=int, default=64, help="largest word solved exactly")
    e = esub.add_parser("lowerbound", parents=[common])
    e.add_argument("--k", type=int, default=3)
    e.add_argument("--sigma", default="3..8", help="alphabet sizes, e.g. 3..8 or 2,4")
    e.add_argument("--sharp", action="store_true")
    e.add_argument("--max-n", type=int, default=2_000_000)
    e = esub.add_parser("debruijn", parents=[common])
    e.add_argument("--p", type=int, default=3, help="order")
    e.add_argument("--sigma", type=int, default=3)
    e = esub.add_parser("palindromes", parents=[common])
    e.add_argument("--directive", default="1,1,1,1,1,1,1,1")
    e.add_argument("--m", type=int, default=8)
    e = esub.add_parser("equivalence", parents=[common])
    e.add_argument("--count", type=int, default=1000)
    e.add_argument("--seed", type=int, default=0)
    e.add_argument("--max-n", type=int, default=300)
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
