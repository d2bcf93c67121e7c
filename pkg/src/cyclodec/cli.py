"""Command-line interface.

Subcommands:
    catalog     list built-in codes; --dump NAME prints a code-spec file
    precompute  run the Groebner precomputation and write a formula file
    decode      correct one received word against precomputed formulas
    verify      run the verification battery for a (code, formulas) pair

Exit codes (stable, also asserted by the test suite):
    0  success
    2  usage or input error (argparse, malformed word/spec/formula file)
    3  uncorrectable word (decode)
    4  artifact mismatch: formula file does not belong to the code
    5  verification failure (first counterexample printed)
    6  precomputation budget exhausted

The Groebner pair budget defaults to 10^7 and can be overridden with
--budget or the CYCLODEC_BUDGET environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import catalog
from .codespec import CodeSpecError, build_code, read_codespec
from .decoder_online import ArtifactMismatchError, decode_with_division, one_step_decode
from .formula_extraction import (
    VARIANT_SATURATED,
    FormulaFormatError,
    precompute_formulas,
    read_formula_file,
    serialize,
)
from .groebner import DEFAULT_PAIR_BUDGET, BudgetExhaustedError
from .verify import run_verification

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_UNCORRECTABLE = 3
EXIT_ARTIFACT_MISMATCH = 4
EXIT_VERIFY_FAILED = 5
EXIT_BUDGET = 6

BUDGET_ENV_VAR = "CYCLODEC_BUDGET"


def _parse_word(token: str, n: int) -> tuple[int, ...]:
    if token.startswith(("0x", "0X")):
        value = int(token, 16)
        if value >= 1 << n:
            raise ValueError(f"hex word {token} does not fit length {n}")
        return tuple((value >> i) & 1 for i in range(n))
    if set(token) <= {"0", "1"}:
        if len(token) != n:
            raise ValueError(f"word has {len(token)} bits, code length is {n}")
        return tuple(int(ch) for ch in token)
    raise ValueError(f"word must be 0x-prefixed hex or a {n}-bit 0/1 string")


def _format_word(word: tuple[int, ...]) -> str:
    return "".join(str(b) for b in word)


def _budget(args) -> int:
    if args.budget is not None:
        return args.budget
    env = os.environ.get(BUDGET_ENV_VAR)
    return int(env) if env else DEFAULT_PAIR_BUDGET


def cmd_catalog(args) -> int:
    if args.dump:
        try:
            sys.stdout.write(catalog.spec_text(args.dump))
        except (KeyError, ValueError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        return EXIT_OK
    print(f"{'name':<10} {'n':>4} {'m':>3} {'buildable':<9} note")
    for entry in catalog.entries():
        print(f"{entry.name:<10} {entry.n:>4} {entry.m:>3} {'yes' if entry.buildable else 'no':<9} {entry.note}")
    return EXIT_OK


def cmd_precompute(args) -> int:
    try:
        code = build_code(read_codespec(args.code))
    except (CodeSpecError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    w_max = args.wmax if args.wmax is not None else code.t
    if w_max > code.t:
        print(f"error: wmax {w_max} exceeds the decoding radius t={code.t}", file=sys.stderr)
        return EXIT_USAGE
    trace = sys.stderr if args.trace else None
    try:
        formulas = precompute_formulas(
            code,
            variant=args.variant,
            w_max=w_max,
            scheme=args.order,
            pair_budget=_budget(args),
            trace=trace,
        )
    except BudgetExhaustedError as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(serialize(formulas))
    for w in range(w_max + 1):
        print(f"w={w}: criteria={len(formulas.criteria[w])} "
              f"formulas={len(formulas.formulas[w])} "
              f"relations={sum(len(r) for r in formulas.relations[w].values())} "
              f"[{formulas.gb_stats[w]}]")
    print(f"wrote {args.out}")
    return EXIT_OK


def cmd_decode(args) -> int:
    try:
        code = build_code(read_codespec(args.code))
        formulas = read_formula_file(args.formulas)
        word = _parse_word(args.word, code.n)
    except (CodeSpecError, FormulaFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    decode = one_step_decode if formulas.variant == VARIANT_SATURATED else decode_with_division
    try:
        result = decode(word, code, formulas)
    except ArtifactMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ARTIFACT_MISMATCH
    if args.json:
        print(json.dumps({
            "ok": result.ok,
            "corrected": _format_word(result.corrected),
            "error_positions": sorted(result.error.positions) if result.error else None,
            "weight": result.weight,
            "path": result.path,
            "detail": result.detail,
        }, sort_keys=True))
    else:
        if result.ok:
            print(f"corrected: {_format_word(result.corrected)}")
            print(f"error positions: {sorted(result.error.positions)}")
            print(f"weight: {result.weight}")
        else:
            print(f"decode failed: {result.detail}")
    return EXIT_OK if result.ok else EXIT_UNCORRECTABLE


def cmd_verify(args) -> int:
    try:
        code = build_code(read_codespec(args.code))
        formulas = read_formula_file(args.formulas)
    except (CodeSpecError, FormulaFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    results = run_verification(code, formulas, exhaustive=args.exhaustive)
    for result in results:
        print(result.line())
    failed = [r for r in results if not r.ok]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclodec",
        description="One-step algebraic decoding of binary cyclic codes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_cat = sub.add_parser("catalog", help="list built-in codes")
    p_cat.add_argument("--dump", metavar="NAME", help="print the code-spec file for a catalog code")
    p_cat.set_defaults(func=cmd_catalog)

    p_pre = sub.add_parser("precompute", help="precompute weight criteria and locator formulas")
    p_pre.add_argument("--code", required=True, help="code-spec file")
    p_pre.add_argument("--out", required=True, help="output formula file")
    p_pre.add_argument("--variant", choices=["saturated", "fieldeq"], default="saturated")
    p_pre.add_argument("--wmax", type=int, default=None, help="largest weight (default: t)")
    p_pre.add_argument("--budget", type=int, default=None,
                       help=f"Groebner pair budget (default {DEFAULT_PAIR_BUDGET}, env {BUDGET_ENV_VAR})")
    p_pre.add_argument("--order", choices=["lex", "block"], default="lex",
                       help="monomial-order scheme for the precomputation")
    p_pre.add_argument("--trace", action="store_true", help="write Groebner progress to stderr")
    p_pre.set_defaults(func=cmd_precompute)

    p_dec = sub.add_parser("decode", help="decode one received word")
    p_dec.add_argument("--code", required=True)
    p_dec.add_argument("--formulas", required=True)
    p_dec.add_argument("--word", required=True, help="received word as 0/1 string or 0x hex")
    p_dec.add_argument("--json", action="store_true", help="machine-readable output")
    p_dec.set_defaults(func=cmd_decode)

    p_ver = sub.add_parser("verify", help="run the verification battery")
    p_ver.add_argument("--code", required=True)
    p_ver.add_argument("--formulas", required=True)
    p_ver.add_argument("--exhaustive", action="store_true",
                       help="sweep every codeword instead of a sample")
    p_ver.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


def run() -> None:
    raise SystemExit(main())
