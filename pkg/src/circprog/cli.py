"""Command-line demonstrator.

    circprog demo <name> [--take N] [--count N] [--variant V]
                         [--input CSV | --file PATH] [--budget N]

Prints the demo's elements on one comma-separated line, then the arena's
counters as ``key=value`` lines and the wall time as ``elapsed_ms=``.
Exit status is 0 on success, 1 on a runtime error and 2 on a usage error.

``stream_nodes`` and ``tree_nodes`` count constructed list and tree nodes
only; ``cells_allocated`` counts every engine cell, input cells included.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass

from . import bfs, knots, selfref
from .engine import AllocStats, Arena, CircprogError, stats
from .lazy_list import from_iterable, take, to_list

DEMOS = (
    "ones",
    "circ",
    "uncirc",
    "double",
    "thread",
    "bfirst",
    "unique",
    "uniqueF",
    "unique-backpatch",
    "primes",
)

VARIANTS = {
    "bfirst": ("finite", "infinite"),
    "primes": ("circular", "sieve", "isprime"),
}

DEFAULT_INPUT = {
    "thread": [4, 2, 6, 1, 3, 5, 7],
    "unique": [1, 2, 1, 3, 2],
    "uniqueF": [1, 2, 1, 3, 2],
    "unique-backpatch": [1, 2, 1, 3, 2],
}


@dataclass
class DemoReport:
    name: str
    output: list
    stats: AllocStats
    elapsed_ms: float

    def to_text(self) -> str:
        data = ",".join(_fmt(x) for x in self.output)
        return f"{data}\n{self.stats.to_text()}\nelapsed_ms={self.elapsed_ms:.3f}"


def _fmt(x):
    if isinstance(x, bool):
        return str(x).lower()
    return str(x)


def parse_report(text: str) -> tuple[list[str], AllocStats]:
    """Split a report back into its data fields and counters."""
    first, _, rest = text.partition("\n")
    return (first.split(",") if first else []), AllocStats.from_text(rest)


def _counting_spec(period: int) -> knots.GenSpec:
    return knots.GenSpec(
        seed=0, step=lambda y: y + 1, emit=lambda y: y, stop=lambda y: y == period - 1
    )


def _complete_tree(size: int, i: int = 1):
    """First ``size`` nodes of the heap-indexed tree."""
    if i > size:
        return None
    return (_complete_tree(size, 2 * i), i, _complete_tree(size, 2 * i + 1))


def run_demo(name: str, *, take_n=None, count=None, variant=None, items=None, budget=None):
    variants = VARIANTS.get(name)
    if variant is not None and (variants is None or variant not in variants):
        raise ValueError(f"demo {name!r} has no variant {variant!r}")
    if variant is None and variants:
        variant = variants[0]
    if items is None:
        items = DEFAULT_INPUT.get(name)
    budget = knots.DEFAULT_BUDGET if budget is None else budget

    a = Arena()
    start = time.perf_counter()
    if name == "ones":
        out = take(knots.ones(a), 10 if take_n is None else take_n)
    elif name in ("circ", "uncirc"):
        build = knots.circ if name == "circ" else knots.uncirc
        s = build(a, _counting_spec(3 if count is None else count), budget)
        out = take(s, 10 if take_n is None else take_n)
    elif name == "double":
        n = 5 if count is None else count
        spec = knots.GenSpec(1, lambda y: y + 1, lambda y: 10 * y, lambda y: y == n + 1)
        d = knots.double(a, spec, budget)
        fwd = knots.forward_elements(d)
        back = knots.backward_elements(knots.last_node(d)) if fwd else []
        out = fwd + back
    elif name == "thread":
        out = knots.threaded_walk(knots.thread(a, items))
    elif name == "bfirst":
        k = 15 if count is None else count
        if variant == "finite":
            t = bfs.tree_from_nested(a, _complete_tree(k))
            out = to_list(bfs.bfirst(t))
        else:
            out = take(bfs.bfirst(bfs.heap_tree(a)), k if take_n is None else take_n)
    elif name == "unique":
        out = to_list(selfref.unique(a, from_iterable(a, items)))
    elif name == "uniqueF":
        out = to_list(selfref.unique_f(a, from_iterable(a, items)))
    elif name == "unique-backpatch":
        out = selfref.unique_backpatch(items)
    elif name == "primes":
        k = 10 if count is None else count
        if variant == "sieve":
            out = take(selfref.sieve_baseline(a), k)
        elif variant == "circular":
            out = take(selfref.primes_circular(a), k)
        else:
            isprime, primes = selfref.isprime_shared(a)
            out = [isprime(n) for n in items] if items else take(primes, k)
    else:
        raise ValueError(f"unknown demo {name!r}")
    elapsed = (time.perf_counter() - start) * 1000.0
    return DemoReport(name, out, stats(a), elapsed)


def _csv_ints(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def _nonneg(text):
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="circprog", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    demo = sub.add_parser("demo", help="run one of the circular-program demos")
    demo.add_argument("name", choices=DEMOS)
    demo.add_argument("--take", type=_nonneg, dest="take_n")
    demo.add_argument("--count", type=_nonneg)
    demo.add_argument("--variant")
    src = demo.add_mutually_exclusive_group()
    src.add_argument("--input", type=_csv_ints)
    src.add_argument("--file")
    demo.add_argument("--budget", type=_nonneg)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    items = args.input
    if args.file:
        try:
            with open(args.file) as fh:
                items = [int(line) for line in fh if line.strip()]
        except (OSError, ValueError) as exc:
            parser.error(f"cannot read --file: {exc}")
    variants = VARIANTS.get(args.name)
    if args.variant is not None and (variants is None or args.variant not in variants):
        allowed = ", ".join(variants) if variants else "none"
        parser.error(f"demo {args.name!r} variants: {allowed}")
    try:
        report = run_demo(
            args.name,
            take_n=args.take_n,
            count=args.count,
            variant=args.variant,
            items=items,
            budget=args.budget,
        )
    except (CircprogError, OverflowError, ValueError, RecursionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(report.to_text())
    return 0


if __name__ == "__main__":
    sys.exit(main())
