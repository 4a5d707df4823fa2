"""Command line interface: ``gemloc {localize,profile,pattern,table,explain,check}``.

Exit codes: 0 success, 1 failed check suite, 2 malformed input, 3 input
rejected by the grammar.
"""

from __future__ import annotations

import argparse
import json
import sys

from .checks import SUITES, run_suite
from .engine import arithmetic_corners, localize_gem
from .errors import GrammarError, ParseError
from .spectra import pattern_of
from .table import render_table
from .textio import gem_to_json, parse_gem, parse_group, parse_spectrum, render_gem

EXIT_FAILED, EXIT_PARSE, EXIT_GRAMMAR = 1, 2, 3


def _emit(args, text: str, data) -> None:
    if args.json:
        print(json.dumps(data, ensure_ascii=False, sort_keys=True))
    else:
        print(text)


def _single_group(text: str):
    """Accept ``H(G)`` or a bare group ``G``."""
    stripped = text.strip()
    if stripped.startswith("H("):
        x = parse_gem(stripped)
        if x.degrees() not in ([], [0]):
            raise ParseError("explain takes a single H(G) target", 0)
        return x[0]
    return parse_group(stripped)


def cmd_localize(args) -> int:
    prof = parse_spectrum(args.spectrum)
    result = localize_gem(prof, parse_gem(args.target))
    _emit(args, render_gem(result), gem_to_json(result))
    return 0


def cmd_profile(args) -> int:
    prof = parse_spectrum(args.spectrum)
    _emit(args, str(prof), {
        "rational_nonacyclic": prof.rational_nonacyclic,
        "nonacyclic_primes": str(prof.nonacyclic_primes),
    })
    return 0


def cmd_pattern(args) -> int:
    pat = pattern_of(parse_spectrum(args.spectrum))
    _emit(args, str(pat), {"pattern": str(pat)})
    return 0


def cmd_table(args) -> int:
    text = render_table()
    if args.json:
        from .table import PATTERN_PROFILES, table_cells

        print(json.dumps({
            name: dict(zip((str(p) for p in PATTERN_PROFILES), cells))
            for name, cells in table_cells()
        }, ensure_ascii=False))
    else:
        sys.stdout.write(text)
    return 0


def cmd_explain(args) -> int:
    prof = parse_spectrum(args.spectrum)
    g = _single_group(args.group)
    rep = arithmetic_corners(prof, g)
    corners = {
        "localization": rep.localization,
        "prime_product": rep.prime_product,
        "rationalization": rep.rationalization,
        "rationalized_product": rep.rationalized_product,
    }
    if args.json:
        data = {k: gem_to_json(v) for k, v in corners.items()}
        data.update(primes=str(rep.primes), symbolic_product=rep.symbolic_product)
        print(json.dumps(data, ensure_ascii=False, sort_keys=True))
        return 0
    tag = "  [symbolic-product]" if rep.symbolic_product else ""
    print(f"spectrum:  {prof}")
    print(f"group:     {g}")
    print(f"primes:    {rep.primes}")
    print(f"top-left     L_E HG:               {render_gem(rep.localization)}")
    print(f"top-right    prod_p L_(MZ/p) HG:   {render_gem(rep.prime_product)}{tag}")
    print(f"bottom-left  H(Q ⊗ G):             {render_gem(rep.rationalization)}")
    print(f"bottom-right MQ ∧ prod_p (...):    {render_gem(rep.rationalized_product)}")
    print(f"result: {render_gem(rep.localization)}")
    return 0


def cmd_check(args) -> int:
    results = run_suite(
        args.suite, count=args.count, seed=args.seed, depth=args.depth,
        max_gens=args.max_gens, max_entry=args.max_entry,
    )
    if args.json:
        print(json.dumps([
            {"suite": r.name, "checked": r.checked, "passed": r.passed, "failures": r.failures[:20]}
            for r in results
        ], ensure_ascii=False))
    else:
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            print(f"{status} {r.name}: {r.checked} checked, {len(r.failures)} failures")
            for f in r.failures[:5]:
                print(f"  {f}")
    return 0 if all(r.passed for r in results) else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="random seed for check suites")

    parser = argparse.ArgumentParser(
        prog="gemloc", parents=[common],
        description="Bousfield localization of stable GEMs from acyclicity profiles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("localize", parents=[common], help="compute L_E X")
    p.add_argument("spectrum")
    p.add_argument("target", help="H(G) or a wedge H(G0) v Σ^k H(Gk) ...")
    p.set_defaults(func=cmd_localize)

    p = sub.add_parser("profile", parents=[common], help="acyclicity profile of a spectrum")
    p.add_argument("spectrum")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("pattern", parents=[common], help="acyclicity pattern I-IV")
    p.add_argument("spectrum")
    p.set_defaults(func=cmd_pattern)

    p = sub.add_parser("table", parents=[common], help="print the summary table")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("explain", parents=[common], help="show the arithmetic square")
    p.add_argument("spectrum")
    p.add_argument("group", help="H(G) or G")
    p.set_defaults(func=cmd_explain)

    p = sub.add_parser("check", parents=[common], help="run a property suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--depth", type=int, default=8)
    p.add_argument("--max-gens", type=int, default=6)
    p.add_argument("--max-entry", type=int, default=50)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    args.json = getattr(args, "json", False)
    args.seed = getattr(args, "seed", 0)
    try:
        return args.func(args)
    except ParseError as e:
        print(f"gemloc: parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except GrammarError as e:
        print(f"gemloc: rejected: {e}", file=sys.stderr)
        return EXIT_GRAMMAR


if __name__ == "__main__":
    sys.exit(main())
