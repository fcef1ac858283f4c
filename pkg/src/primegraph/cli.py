"""Command line interface.

    primegraph analyze --ring Z8 --prime 2 --max-power 3 --checks all
    primegraph analyze --ab 2,6 --max-power 1 --json
    primegraph table1 [--json]
    primegraph sweep --family zpm --primes 2,3 --exponents 2,3 --max-power 1
    primegraph graph --ring Z6 --prime 3 [--json]

Exit status: 0 when every enabled check passed, 1 when a check failed,
2 for bad input or an exceeded size cap.
"""

from __future__ import annotations

import argparse
import sys

from . import analysis
from .analysis import AnalysisConfig, Caps
from .errors import PrimeGraphError
from .graph import abstract_split_graph, build_graph
from .ring import RingSpec

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_INPUT = 2


def _int_list(text: str) -> list[int]:
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "-" in part:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def _ab(text: str) -> tuple[int, int]:
    vals = _int_list(text)
    if len(vals) != 2:
        raise argparse.ArgumentTypeError(f"expected a,b but got {text!r}")
    return vals[0], vals[1]


def _add_caps(p: argparse.ArgumentParser) -> None:
    p.add_argument("--cap-gens", type=int, default=analysis.DEFAULT_PRODUCT_CAP,
                   help="limit on pairwise products and enumerated generators (default %(default)s)")
    p.add_argument("--cap-ring", type=int, default=analysis.DEFAULT_RING_CAP,
                   help="largest ring order handled exhaustively (default %(default)s)")


def _caps(args) -> Caps:
    return Caps(ring=args.cap_ring, gens=args.cap_gens)


def _add_ring_args(p: argparse.ArgumentParser, abstract: bool = True) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--ring", help="ring such as Z6, Z8 or Z2xZ3")
    if abstract:
        src.add_argument("--ab", type=_ab, help="abstract split graph parameters a,b")
    sel = p.add_mutually_exclusive_group()
    sel.add_argument("--prime", help="generator of the prime ideal, e.g. 3 or (2,1)")
    sel.add_argument("--prime-set", help="explicit members: 0,3 for Z_n, (0,0);(0,1);(0,2) for products")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="primegraph", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze one ring/prime pair or abstract (a,b)")
    _add_ring_args(p)
    p.add_argument("--max-power", type=int, default=3)
    p.add_argument("--checks", default="all", help="csv of oracle,polymatroid,linquot,primary,covers or 'all'")
    p.add_argument("--json", action="store_true")
    _add_caps(p)

    p = sub.add_parser("table1", help="recompute the published generator counts for Z6 and Z8")
    p.add_argument("--json", action="store_true")
    _add_caps(p)

    p = sub.add_parser("sweep", help="generator counts across a family of rings")
    p.add_argument("--family", choices=("zpm", "zn"), required=True)
    p.add_argument("--primes", type=_int_list, default=[2, 3])
    p.add_argument("--exponents", type=_int_list, default=[2, 3])
    p.add_argument("--moduli", type=_int_list, default=list(range(2, 13)), help="e.g. 4-12 or 4,6,8")
    p.add_argument("--max-power", type=int, default=1)
    p.add_argument("--no-oracle", action="store_true", help="skip the brute-force power check")
    p.add_argument("--json", action="store_true")
    _add_caps(p)

    p = sub.add_parser("graph", help="export the prime ideal graph")
    _add_ring_args(p)
    p.add_argument("--json", action="store_true")
    _add_caps(p)
    return parser


def _run_analyze(args) -> int:
    cfg = AnalysisConfig(
        ring_spec=args.ring,
        prime_selector=args.prime,
        prime_set=args.prime_set,
        abstract_ab=args.ab,
        max_power=args.max_power,
        checks=analysis.parse_checks(args.checks),
        output_format="json" if args.json else "text",
        caps=_caps(args),
    )
    report = analysis.analyze(cfg)
    if args.json:
        sys.stdout.write(analysis.dumps(report.to_dict()))
    else:
        sys.stdout.write(analysis.format_analysis(report))
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def _run_table1(args) -> int:
    result = analysis.table1(caps=_caps(args))
    sys.stdout.write(analysis.dumps(result) if args.json else analysis.format_table1(result))
    return EXIT_OK if result["status"] == "PASS" else EXIT_CHECK_FAILED


def _run_sweep(args) -> int:
    result = analysis.sweep(args.family, args.max_power, args.primes, args.exponents, args.moduli,
                            caps=_caps(args), oracle=not args.no_oracle)
    sys.stdout.write(analysis.dumps(result) if args.json else analysis.format_sweep(result))
    return EXIT_OK if result["status"] == "PASS" else EXIT_CHECK_FAILED


def _run_graph(args) -> int:
    if args.ring is not None:
        cfg = AnalysisConfig(ring_spec=args.ring, prime_selector=args.prime, prime_set=args.prime_set,
                             caps=_caps(args))
        r = RingSpec.parse(args.ring)
        g = build_graph(r, analysis._select_prime(r, cfg), args.cap_ring)
    else:
        g = abstract_split_graph(*args.ab)
    sys.stdout.write(g.to_json() + "\n" if args.json else g.to_adjacency_text())
    return EXIT_OK


_COMMANDS = {"analyze": _run_analyze, "table1": _run_table1, "sweep": _run_sweep, "graph": _run_graph}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (PrimeGraphError, ValueError) as exc:
        print(f"primegraph: error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
