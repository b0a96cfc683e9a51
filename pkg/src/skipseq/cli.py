"""Command-line driver: generate, verify, analyze, oracle, trace.

Exit codes: 0 success/pass, 1 combinatorial failure (witness printed),
2 usage or validation error.
"""

from __future__ import annotations

import argparse
import json
import secrets
import sys
from typing import Optional

from . import analyze, construct, verify
from .construct import ValidationError

PASS, FAIL, USAGE = 0, 1, 2


def _parse_word(text: str) -> tuple[int, ...]:
    tokens = text.replace(",", " ").split()
    try:
        return tuple(int(t) for t in tokens)
    except ValueError as exc:
        raise ValidationError(f"malformed word: {exc}") from None


def _emit(text: str, path: Optional[str]) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_generate(args) -> int:
    glist = construct.generate(args.s, args.n)
    sseq = construct.build_supersequence(glist)
    if args.format == "json":
        payload = {
            "s": glist.s,
            "n": glist.n,
            "sequences": [list(seq) for seq in glist.sequences],
            "supersequence": list(sseq.word),
            "length": sseq.length,
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.output)
    else:
        lines = [",".join(map(str, seq)) for seq in glist.sequences]
        lines.append(",".join(map(str, sseq.word)))
        _emit("\n".join(lines) + "\n", args.output)
    return PASS


def _witness_payload(report: verify.VerificationReport) -> dict:
    # elapsed time is excluded so identical configs give identical output
    stats = {k: v for k, v in report.stats.items() if k != "elapsed_s"}
    payload = {
        "verdict": report.verdict,
        "mode": report.mode,
        "stats": stats,
        "seed": report.seed,
    }
    if report.witness is not None:
        payload["witness"] = list(report.witness.permutation)
    return payload


def _cmd_verify(args) -> int:
    if args.word is not None:
        word = _parse_word(args.word)
    elif args.word_file is not None:
        with open(args.word_file) as fh:
            word = _parse_word(fh.read())
    elif args.s is not None and args.n is not None:
        word = construct.build_supersequence(
            construct.generate(args.s, args.n)
        ).word
    else:
        raise ValidationError("supply --word, --word-file, or --s with --n")
    m = args.m if args.m is not None else max(word)
    if args.sampled:
        seed = args.seed if args.seed is not None else secrets.randbits(32)
        extra: list[tuple[int, ...]] = []
        if args.s is not None and args.n is not None and m == args.n + 1:
            extra = verify.adversarial_permutations(args.s, args.n)
        report = verify.verify_supersequence_sampled(
            word, m, args.count, seed, extra
        )
    else:
        report = verify.verify_supersequence_exhaustive(
            word, m, allow_long=args.allow_long
        )
    if args.format == "json":
        print(json.dumps(_witness_payload(report), indent=2))
    else:
        print(f"verdict: {report.verdict} ({report.mode})")
        if report.seed is not None:
            print(f"seed: {report.seed}")
        for key, value in report.stats.items():
            if key != "elapsed_s":
                print(f"{key}: {value}")
        if report.witness is not None:
            perm = ",".join(map(str, report.witness.permutation))
            print(f"witness: {perm}")
    return PASS if report.passed else FAIL


def _parse_range(text: str) -> range:
    lo, _, hi = text.partition(":")
    return range(int(lo), int(hi) + 1)


def _cmd_analyze(args) -> int:
    if args.coefficients:
        s_values = _parse_range(args.s_range) if args.s_range else range(2, 11)
        lines = [f"{s}: {analyze.coefficient(s)}" for s in s_values]
        _emit("\n".join(lines) + "\n", args.output)
        return PASS
    if args.m_range:
        ms = _parse_range(args.m_range)
    elif args.m is not None:
        ms = [args.m]
    else:
        raise ValidationError("supply --m, --m-range, or --coefficients")
    rows = analyze.comparison_table(ms, with_actual=args.with_actual)
    if args.format == "csv":
        _emit(analyze.rows_to_csv(rows), args.output)
    elif args.format == "json":
        _emit(analyze.rows_to_json(rows) + "\n", args.output)
    else:
        header = " ".join(f"{name:>12}" for name in analyze.CSV_FIELDS)
        lines = [header]
        for row in rows:
            record = [
                row.m, row.classical, row.zalinescu, row.radomirovic,
                row.best_s, row.best_len, row.actual,
            ]
            lines.append(
                " ".join(f"{'-' if v is None else v:>12}" for v in record)
            )
        _emit("\n".join(lines) + "\n", args.output)
    return PASS


def _cmd_oracle(args) -> int:
    length, word = verify.shortest_supersequence_oracle(args.m, args.cap)
    print(f"shortest length over {args.m} letters: {length}")
    print("example: " + ",".join(map(str, word)))
    return PASS


def _cmd_trace(args) -> int:
    glist = construct.generate(args.s, args.n)
    rho = _parse_word(args.rho)
    trace = verify.trace_m_sets(glist, rho, args.k)
    for idx, m_set in trace.steps:
        letters = ",".join(map(str, sorted(m_set))) or "-"
        print(f"M[{idx}] = {{{letters}}}")
    print(f"terminated at index {trace.terminated_at}")
    bound = glist.s - 1
    print(f"max |M| = {trace.max_size} (bound {bound})")
    return PASS if trace.max_size <= bound else FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skipseq",
        description="Build and verify permutation supersequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit a sequence list + supersequence")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--output")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("verify", help="check the supersequence property")
    p.add_argument("--word")
    p.add_argument("--word-file")
    p.add_argument("--s", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--sampled", action="store_true")
    p.add_argument("--count", type=int, default=100_000)
    p.add_argument("--seed", type=int)
    p.add_argument("--allow-long", action="store_true")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("analyze", help="length formulas and comparison table")
    p.add_argument("--m", type=int)
    p.add_argument("--m-range")
    p.add_argument("--coefficients", action="store_true")
    p.add_argument("--s-range")
    p.add_argument("--with-actual", action="store_true")
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.add_argument("--output")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("oracle", help="brute-force shortest supersequence")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--cap", type=int)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("trace", help="replay the M-set recursion")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--rho", required=True)
    p.set_defaults(func=_cmd_trace)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else PASS
    try:
        return args.func(args)
    except (ValidationError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
