"""Command-line interface.

Subcommands:

* ``eq W1 W2`` - print ``true``/``false`` for free-band equality; with
  ``--exit-status`` additionally exit 1 on inequality.
* ``min W`` - print the short-lex minimal representative.
* ``mul W1 W2`` - print the canonical form of the product, computed on
  transducers (multiply, minimize, extract the minimal word).
* ``transducer W [--minimal] [--format fbt|dot]`` - emit the (minimal)
  interval transducer.
* ``enum K [--max N]`` - print the number of nonempty free-band elements
  over an alphabet of size K.
* ``bench --suite NAME --out FILE [--scale S] [--seed X]`` - write
  ``x<TAB>seconds`` benchmark rows.

Words are contiguous strings over ``a-z A-Z 0-9`` by default, or
comma-separated non-negative integers with ``--ints``.  Exit codes: 0 on
success, 2 on parse/usage errors (one-line diagnostic on stderr).
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .bench import SUITES, default_samples, run_bench, write_dat
from .enumeration import enumerate_fb
from .interval import interval_transducer
from .minimize import equal_in_free_band, minimize
from .minword import _min_word, normalize
from .multiply import multiply
from .oracles import BudgetExceeded
from .transducer import to_dot, to_fbt
from .words import WordFormatError, format_word, parse_word


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="freeband",
        description="Exact computation in free bands via synchronous transducers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_ints(p):
        p.add_argument(
            "--ints",
            action="store_true",
            help="read and write words as comma-separated integer letters",
        )

    p_eq = sub.add_parser("eq", help="test equality of two words in the free band")
    p_eq.add_argument("word1")
    p_eq.add_argument("word2")
    add_ints(p_eq)
    p_eq.add_argument(
        "--exit-status",
        action="store_true",
        help="exit with status 1 when the words are not equal",
    )

    p_min = sub.add_parser("min", help="print the short-lex minimal representative")
    p_min.add_argument("word")
    add_ints(p_min)

    p_mul = sub.add_parser("mul", help="multiply two words and print the canonical form")
    p_mul.add_argument("word1")
    p_mul.add_argument("word2")
    add_ints(p_mul)

    p_t = sub.add_parser("transducer", help="emit the interval transducer of a word")
    p_t.add_argument("word")
    add_ints(p_t)
    p_t.add_argument("--minimal", action="store_true", help="minimize before emitting")
    p_t.add_argument("--format", choices=("fbt", "dot"), default="fbt")

    p_enum = sub.add_parser("enum", help="count the elements of the free band")
    p_enum.add_argument("alphabet_size", type=int)
    p_enum.add_argument(
        "--max",
        type=int,
        default=400_000,
        dest="max_elements",
        help="element budget before giving up (default 400000)",
    )

    p_bench = sub.add_parser("bench", help="run a timing suite and write a .dat file")
    p_bench.add_argument("--suite", required=True, choices=SUITES)
    p_bench.add_argument("--out", required=True, help="output file for x<TAB>seconds rows")
    p_bench.add_argument("--scale", type=float, default=0.1, help="grid scale (1.0 = full)")
    p_bench.add_argument("--seed", type=int, default=42, help="64-bit sample seed")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except (WordFormatError, BudgetExceeded, ValueError) as e:
        print(f"freeband: error: {e}", file=sys.stderr)
        return 2


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "eq":
        u = parse_word(args.word1, ints=args.ints)
        v = parse_word(args.word2, ints=args.ints)
        equal = equal_in_free_band(u, v)
        print("true" if equal else "false")
        if args.exit_status and not equal:
            return 1
        return 0

    if args.command == "min":
        w = parse_word(args.word, ints=args.ints)
        print(format_word(normalize(w), ints=args.ints))
        return 0

    if args.command == "mul":
        u = parse_word(args.word1, ints=args.ints)
        v = parse_word(args.word2, ints=args.ints)
        product = multiply(interval_transducer(u), interval_transducer(v))
        print(format_word(_min_word(minimize(product)), ints=args.ints))
        return 0

    if args.command == "transducer":
        w = parse_word(args.word, ints=args.ints)
        t = interval_transducer(w)
        if args.minimal:
            t = minimize(t)
        sys.stdout.write(to_dot(t) if args.format == "dot" else to_fbt(t))
        return 0

    if args.command == "enum":
        if args.alphabet_size < 0:
            raise ValueError("alphabet size must be non-negative")
        print(enumerate_fb(args.alphabet_size, max_elements=args.max_elements))
        return 0

    if args.command == "bench":
        rows = run_bench(args.suite, default_samples(scale=args.scale, seed=args.seed))
        with open(args.out, "w") as out:
            write_dat(rows, out)
        return 0

    raise AssertionError(f"unhandled command {args.command!r}")


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
