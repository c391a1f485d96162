"""Command-line surface: expansions, verification suites, numeric evaluation.

Exit codes: 0 all good, 1 verification failure, 2 usage or parse error.
Suite reports stream one JSON object per line (or aligned text lines).
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .harmonic import AlgElem, contraction_expand, s_r
from .numeric import interp_num
from .regularize import reg_eval
from .suites import SUITES, SuiteConfig, run_suite
from .values import expand_value
from .words import IndexSyntaxError, is_admissible, parse_index, word_of_index

EXPAND_KINDS = ("sr", "contraction", "star", "interp", "regularize")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mzvkit",
        description="exact stuffle-algebra expansions, identity verification "
                    "suites, and numeric evaluation of interpolated zeta/t values")
    sub = parser.add_subparsers(dest="command", required=True)

    p_expand = sub.add_parser("expand", help="expand an index symbolically")
    p_expand.add_argument("kind", choices=EXPAND_KINDS)
    p_expand.add_argument("index", help='index text, e.g. "2,3" or "{2}^3,1"')
    p_expand.add_argument("--flavor", choices=("zeta", "t"), default="zeta")
    p_expand.add_argument("--format", choices=("json", "text"), default="json")

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", choices=SUITES, default="all")
    p_verify.add_argument("--max-p", type=int, default=6)
    p_verify.add_argument("--max-q", type=int, default=6)
    p_verify.add_argument("--max-weight", type=int, default=9)
    p_verify.add_argument("--N", type=int, default=10_000_000)
    p_verify.add_argument("--tol", type=float, default=1e-5)
    p_verify.add_argument("--format", choices=("json", "text"), default="json")

    p_eval = sub.add_parser("eval", help="evaluate an interpolated value numerically")
    p_eval.add_argument("index")
    p_eval.add_argument("--kind", choices=("zeta", "t"), default="zeta")
    p_eval.add_argument("--r", required=True,
                        help='exact rational interpolation parameter, e.g. "1/2"')
    p_eval.add_argument("--N", type=int, default=10_000_000)
    p_eval.add_argument("--format", choices=("json", "text"), default="json")
    return parser


def _cmd_expand(args) -> int:
    idx = parse_index(args.index)
    w = word_of_index(idx)
    if args.kind == "sr":
        result = s_r(w)
    elif args.kind == "contraction":
        result = contraction_expand(idx)
    elif args.kind in ("star", "interp"):
        if not is_admissible(idx):
            raise ValueError(f"index {idx} is not admissible")
        result = expand_value(w, args.flavor, args.kind)
    else:
        result = reg_eval(AlgElem.from_word(w), args.flavor)
    if args.format == "json":
        print(json.dumps(result.to_json()))
    else:
        print(result)
    return 0


def _cmd_verify(args) -> int:
    config = SuiteConfig(suite=args.suite, max_p=args.max_p, max_q=args.max_q,
                         max_weight=args.max_weight, N=args.N, tol=args.tol,
                         fmt=args.format)
    failures = 0
    for rep in run_suite(config):
        if args.format == "json":
            print(json.dumps(rep.to_json()), flush=True)
        else:
            print(rep.to_text(), flush=True)
        failures += 0 if rep.passed else 1
    return 1 if failures else 0


def _cmd_eval(args) -> int:
    idx = parse_index(args.index)
    if not is_admissible(idx):
        raise ValueError(f"index {idx} is not admissible (first entry must be >= 2)")
    r_val = Fraction(args.r)
    res = interp_num(idx, args.kind, r_val, args.N)
    if args.format == "json":
        print(json.dumps(res.to_json()))
    else:
        print(f"{res.value!r} +- {res.err:.3e} (N={res.cutoff})")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "expand":
            return _cmd_expand(args)
        if args.command == "verify":
            return _cmd_verify(args)
        return _cmd_eval(args)
    except (IndexSyntaxError, ValueError, ZeroDivisionError) as exc:
        print(f"mzvkit: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
