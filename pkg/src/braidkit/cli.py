"""
Command-line front end.

Words are given as positional arguments or, when absent, read from stdin
one per line.  Global flags pick the text format and strand count; --json
switches machine-readable output.  Exit codes: 0 success (for ``trivial``:
trivial; for ``equal``: equal; for ``fuzz``: no disagreement), 1 negative
verdict, 2 usage, malformed input, or step-budget exhaustion.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import dynnikov, gridnf, handle, oracle, redress, word as wordmod
from .word import BraidWord, StepBudgetExceeded

BENCH_SCHEMA = "# braidkit bench CSV v1: method,n,len,count,total_steps,elapsed_ns"

DEFAULT_BUDGET = 10**6


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidkit",
        description="Braid word problem solvers: normal forms, redressing, "
        "handle reduction, Dynnikov coordinates.",
    )
    parser.add_argument("--n", type=int, default=None, help="strand count (default: inferred)")
    parser.add_argument(
        "--format", choices=wordmod.FORMATS, default=wordmod.ALPHA, help="word text format"
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", help="print the normal form of each word")
    p.add_argument("--form", choices=("greedy", "symmetric"), default="greedy")
    p.add_argument("words", nargs="*")
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("trivial", help="decide whether each word represents the unit braid")
    p.add_argument("--method", choices=oracle.METHOD_NAMES, default="greedy")
    p.add_argument("words", nargs="*")
    p.set_defaults(func=_cmd_trivial)

    p = sub.add_parser("equal", help="decide whether two words represent the same braid")
    p.add_argument("word1")
    p.add_argument("word2")
    p.set_defaults(func=_cmd_equal)

    p = sub.add_parser("coords", help="print the Dynnikov coordinates of each word")
    p.add_argument("words", nargs="*")
    p.set_defaults(func=_cmd_coords)

    p = sub.add_parser("redress", help="redress each word into a positive fraction")
    p.add_argument("--left", action="store_true", help="left redressing (v^-1 u)")
    p.add_argument("words", nargs="*")
    p.set_defaults(func=_cmd_redress)

    p = sub.add_parser("reduce", help="handle-reduce each word")
    p.add_argument("--trace", action="store_true", help="print every reduction step")
    p.add_argument("words", nargs="*")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("shorten", help="shorten each word by iterated flip/reduce")
    p.add_argument("words", nargs="*")
    p.set_defaults(func=_cmd_shorten)

    p = sub.add_parser("bench", help="benchmark the solvers, CSV on stdout")
    p.add_argument("--n", dest="bench_n", type=int, required=True)
    p.add_argument("--len", dest="bench_len", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--methods", default=",".join(oracle.METHOD_NAMES))
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("fuzz", help="cross-check all solvers on random words")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=100)
    p.set_defaults(func=_cmd_fuzz)

    return parser


def _input_words(args) -> list[BraidWord]:
    texts = args.words if args.words else [line.strip() for line in sys.stdin if line.strip()]
    return [wordmod.parse(t, args.format, args.n) for t in texts]


def _cmd_normalize(args) -> int:
    for w in _input_words(args):
        if args.form == "greedy":
            nf = gridnf.greedy_nf(w)
        else:
            nf = gridnf.symmetric_nf(w)
        print(json.dumps(nf.to_dict()) if args.json else str(nf))
    return 0


def _cmd_trivial(args) -> int:
    all_trivial = True
    for w in _input_words(args):
        verdict = oracle.is_trivial(w, args.method, DEFAULT_BUDGET)
        all_trivial &= verdict
        if args.json:
            print(json.dumps({"word": wordmod.render(w, args.format), "trivial": verdict}))
        else:
            print("trivial" if verdict else "nontrivial")
    return 0 if all_trivial else 1


def _cmd_equal(args) -> int:
    w1 = wordmod.parse(args.word1, args.format, args.n)
    w2 = wordmod.parse(args.word2, args.format, args.n)
    verdict = gridnf.equal(w1, w2)
    print(json.dumps({"equal": verdict}) if args.json else ("equal" if verdict else "distinct"))
    return 0 if verdict else 1


def _cmd_coords(args) -> int:
    for w in _input_words(args):
        c = dynnikov.coords(w)
        print(json.dumps(list(c.coords)) if args.json else str(c))
    return 0


def _cmd_redress(args) -> int:
    for w in _input_words(args):
        if args.left:
            first, second = redress.redress_left(w, DEFAULT_BUDGET)
            labels = ("v", "u")
        else:
            first, second = redress.redress_right(w, DEFAULT_BUDGET)
            labels = ("u", "v")
        a, b = wordmod.render(first), wordmod.render(second)
        if args.json:
            print(json.dumps({labels[0]: a, labels[1]: b}))
        else:
            print(a)
            print(b)
    return 0


def _cmd_reduce(args) -> int:
    for w in _input_words(args):
        if args.trace:
            for step, (cur, span) in enumerate(handle.iter_reduction(w, DEFAULT_BUDGET)):
                text = wordmod.render(cur)
                if span is not None:
                    text = (
                        text[: span.start]
                        + "["
                        + text[span.start : span.end + 1]
                        + "]"
                        + text[span.end + 1 :]
                    )
                print(f"{step}: {text}")
                reduced = cur
        else:
            reduced = handle.handle_reduce(w, DEFAULT_BUDGET)
        out = wordmod.render(reduced, args.format)
        print(json.dumps({"reduced": out}) if args.json else out)
    return 0


def _cmd_shorten(args) -> int:
    for w in _input_words(args):
        short = handle.shorten(w, DEFAULT_BUDGET)
        out = wordmod.render(short, args.format)
        print(json.dumps({"short": out}) if args.json else out)
    return 0


def _count_steps(w: BraidWord, method: str) -> int:
    if method == "greedy":
        return gridnf.greedy_nf_counted(w)[1]
    if method == "symmetric":
        return gridnf.symmetric_nf_counted(w)[1]
    if method == "redress":
        return redress.trivial_by_redress_counted(w, redress.DOUBLE_RIGHT)[2]
    if method == "redress-left":
        return redress.trivial_by_redress_counted(w, redress.RIGHT_THEN_LEFT)[2]
    if method == "handle":
        return handle.handle_reduce_counted(w)[1]
    if method == "dynnikov":
        dynnikov.coords(w)
        return len(w)
    raise ValueError(f"unknown method {method!r}")


def _cmd_bench(args) -> int:
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    for m in methods:
        if m not in oracle.METHOD_NAMES:
            raise ValueError(f"unknown method {m!r}")
    words = [
        oracle.random_word(args.bench_n, args.bench_len, args.seed + i)
        for i in range(args.count)
    ]
    print(BENCH_SCHEMA)
    print("method,n,len,count,total_steps,elapsed_ns")
    for m in methods:
        t0 = time.perf_counter_ns()
        total = sum(_count_steps(w, m) for w in words)
        elapsed = time.perf_counter_ns() - t0
        print(f"{m},{args.bench_n},{args.bench_len},{args.count},{total},{elapsed}")
    return 0


def _cmd_fuzz(args) -> int:
    report = oracle.cross_check(count=args.count, seed=args.seed)
    print(json.dumps(report.to_dict(), indent=2))
    return 0 if report.ok else 1


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except StepBudgetExceeded as exc:
        print(f"braidkit: step budget exhausted: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"braidkit: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
