"""Command-line interface: ``nestrep <subcommand> ...``.

Exit status: 0 success, 1 domain failure (refutation found a solution,
benchmark disagreement, digit run too long), 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench, construct, oracle, search, sqlgen
from .engine import UNARY, Chain, apply_chain, format_chain, parse_chain
from .errors import ChainFormatError, DisagreementError, NestrepError, RunTooLongError


class UsageError(Exception):
    pass


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {text}")
    return value


def _non_negative(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected an integer >= 0, got {text}")
    return value


def _fraction(text):
    value = float(text)
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"expected a number in [0, 1], got {text}")
    return value


def _add_chain_source(p, with_file=True):
    group = p.add_mutually_exclusive_group(required=True)
    if with_file:
        group.add_argument("--chain", metavar="FILE", help="chain file ('-' for stdin)")
    group.add_argument("--theorem3", type=_positive, metavar="M", help="three-rule chain solving R(M)")
    group.add_argument("--ld", type=_positive, metavar="N", help="optimal length-decreasing chain with N rules")
    group.add_argument("--intro", action="store_true", help="the 1111,111,11,11 chain")


def _load_chain(args):
    if getattr(args, "chain", None) is not None:
        try:
            text = sys.stdin.read() if args.chain == "-" else Path(args.chain).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read chain file: {exc}") from exc
        try:
            return parse_chain(text)
        except ChainFormatError as exc:
            raise UsageError(f"{args.chain}: {exc}") from exc
    if args.theorem3 is not None:
        return construct.theorem3_chain(args.theorem3)
    if args.ld is not None:
        return construct.length_decreasing_chain(args.ld)
    return construct.intro_chain()


def _chain_comment(args):
    if args.theorem3 is not None:
        return f"three-rule blow-up chain solving R({args.theorem3}), innermost first"
    if args.ld is not None:
        return (f"length-decreasing chain with {args.ld} rules solving "
                f"R({construct.a159860(args.ld)}), innermost first")
    return "introduction chain 1111,111,11,11 -> 1, innermost first"


def _bounds(args, depth=None):
    default = search.SearchBounds.default(args.m)
    return search.SearchBounds(
        max_ell=args.max_ell if args.max_ell is not None else default.max_ell,
        max_r=args.max_r if args.max_r is not None else default.max_r,
        max_depth=depth if depth is not None else (args.max_depth or default.max_depth),
    )


def cmd_apply(args, out):
    chain = _load_chain(args)
    if args.stdin:
        inputs = sys.stdin.read().splitlines()
    elif args.ones is not None:
        inputs = [UNARY * args.ones]
    else:
        inputs = [args.input]
    for text in inputs:
        if args.digits:
            result = oracle.normalize_digit_runs(chain, text)
        else:
            result = apply_chain(chain, text)
        out.write(result + "\n")
    return 0


def cmd_verify(args, out):
    chain = _load_chain(args)
    out.write(("true" if oracle.solves(chain, args.m) else "false") + "\n")
    return 0


def cmd_max(args, out):
    out.write(f"{oracle.max_solved(_load_chain(args), args.cap)}\n")
    return 0


def cmd_solve(args, out):
    result = search.find_min_depth(args.m, _bounds(args))
    out.write(result.record() + "\n")
    return 0


def cmd_refute(args, out):
    result = search.search_depth(args.m, args.depth, _bounds(args, depth=args.depth))
    out.write(result.record() + "\n")
    return 1 if result.found else 0


def cmd_chain(args, out):
    chain = _load_chain(args)
    out.write(format_chain(chain, comment=_chain_comment(args)))
    if args.plot:
        from .plotting import plot_length_trace

        max_k = args.plot_max_k or max(oracle.max_solved(chain, 10_000).value + 1, 2)
        plot_length_trace(chain, max_k, args.plot)
    return 0


def cmd_seq(args, out):
    terms = construct.reach_sequence(args.n)
    out.write(" ".join(map(str, terms)) + "\n")
    if args.plot:
        from .plotting import plot_reach

        plot_reach(terms, args.plot)
    return 0


def cmd_sql(args, out):
    options = sqlgen.SqlOptions(
        replace_name=args.replace_name,
        translate_name=args.translate_name,
        include_translate=not args.no_translate,
        empty_literal=args.empty_literal,
    )
    out.write(sqlgen.emit_sql(_load_chain(args), args.column, options) + "\n")
    return 0


def cmd_bench(args, out):
    spec = bench.CorpusSpec(seed=args.seed, count=args.count, max_len=args.max_len,
                            digit_density=args.density)
    report = bench.run_bench(bench.generate_corpus(spec))
    out.write(report.to_records() if args.records else report.to_text())
    if args.plot:
        from .plotting import plot_bench

        plot_bench(report, args.plot)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nestrep", description="Nested REPLACE chains over a unary alphabet.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("apply", help="apply a chain to input strings")
    _add_chain_source(p)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", metavar="STR")
    src.add_argument("--ones", type=_non_negative, metavar="K", help="input is '1' repeated K times")
    src.add_argument("--stdin", action="store_true", help="one input per line on stdin")
    p.add_argument("--digits", action="store_true", help="TRANSLATE digits to '1' first and check run lengths")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("verify", help="does the chain solve R(M)?")
    _add_chain_source(p)
    p.add_argument("--m", type=_positive, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("max", help="largest M with R(M) solved")
    _add_chain_source(p)
    p.add_argument("--cap", type=_positive, default=oracle.DEFAULT_CAP)
    p.set_defaults(func=cmd_max)

    for name, helptext in (("solve", "shallowest chain solving R(M)"),
                           ("refute", "check that no chain of the given depth solves R(M)")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--m", type=_positive, required=True)
        if name == "solve":
            p.add_argument("--max-depth", type=_positive)
        else:
            p.add_argument("--depth", type=_positive, required=True)
        p.add_argument("--max-ell", type=_positive)
        p.add_argument("--max-r", type=_non_negative)
        p.set_defaults(func=cmd_solve if name == "solve" else cmd_refute)

    p = sub.add_parser("chain", help="print a generated chain in chain file format")
    _add_chain_source(p, with_file=False)
    p.add_argument("--plot", metavar="FILE", help="also plot run lengths after each rule")
    p.add_argument("--plot-max-k", type=_positive, metavar="K")
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("seq", help="print a(1..N) of 2, 4, 10, 40, ...")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--plot", metavar="FILE")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("sql", help="emit a nested REPLACE expression")
    _add_chain_source(p)
    p.add_argument("--column", default="s", metavar="EXPR")
    p.add_argument("--no-translate", action="store_true")
    p.add_argument("--replace-name", default="REPLACE")
    p.add_argument("--translate-name", default="TRANSLATE")
    p.add_argument("--empty-literal", default="''")
    p.set_defaults(func=cmd_sql)

    p = sub.add_parser("bench", help="time normalisation strategies on a generated corpus")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=_non_negative, default=10_000)
    p.add_argument("--max-len", type=_positive, default=32)
    p.add_argument("--density", type=_fraction, default=0.5)
    p.add_argument("--records", action="store_true", help="key=value lines instead of a table")
    p.add_argument("--plot", metavar="FILE")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"nestrep: error: {exc}", file=sys.stderr)
        return 2
    except (RunTooLongError, DisagreementError) as exc:
        print(f"nestrep: {exc}", file=sys.stderr)
        return 1
    except NestrepError as exc:
        parser.print_usage(sys.stderr)
        print(f"nestrep: error: {exc}", file=sys.stderr)
        return 2
