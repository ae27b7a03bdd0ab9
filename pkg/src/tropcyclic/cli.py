"""Command-line front end.

Exit codes: 0 success, 1 failed verification, 2 bad input, 3 size guard or overflow.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bounds import mcmullen_U
from .cone import canonical
from .cyclic import SignedCyclicSpec, build_polar, enumerate_rays_with_paths, oracle_extreme_rays, ray_set
from .deform import deformed_member, deformed_row_margins, lse_sandwich_check
from .errors import GuardError
from .paths import count_allowed_paths, count_tropical_paths, render_path
from .patterns import PatternParseError, parse_pattern
from .search import emit_table, max_ntrop
from .semiring import format_maxplus, parse_maxplus
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_GUARD = 3


def _read_pattern(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return parse_pattern(text)


def _int_list(values):
    return [parse_maxplus(v) for v in values]


def _fmt(x) -> str:
    return "(" + ", ".join(format_maxplus(v) for v in x) + ")"


def cmd_count(args) -> int:
    pattern = _read_pattern(args.pattern)
    ntrop = count_tropical_paths(pattern)
    nclass = count_allowed_paths(pattern)
    if args.json:
        print(json.dumps({"p": pattern.p, "d": pattern.d, "ntrop": ntrop, "nclass": nclass}))
    else:
        print(f"ntrop {ntrop}")
        print(f"nclass {nclass}")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    pattern = _read_pattern(args.pattern)
    spec = SignedCyclicSpec(pattern, _int_list(args.t) if args.t else None)
    rays = enumerate_rays_with_paths(spec)
    if args.art:
        for n, ray in enumerate(rays, start=1):
            print(f"ray {n}: {_fmt(ray.coords)}  I={list(ray.path.I)} J={list(ray.path.J)}")
            print(render_path(ray.path, pattern))
            print()
    else:
        print(json.dumps([r.as_dict() for r in rays], indent=None if args.compact else 2))
    if args.oracle:
        match = ray_set(r.coords for r in rays) == ray_set(oracle_extreme_rays(spec))
        print("oracle: MATCH" if match else "oracle: MISMATCH", file=sys.stderr)
        if not match:
            return EXIT_FAILED
    return EXIT_OK


def cmd_table(args) -> int:
    table = emit_table(range(args.p_min, args.p_max + 1), range(args.d_min, args.d_max + 1),
                       mode=args.mode, threads=args.threads, budget=args.budget, seed=args.seed)
    if args.format == "json":
        print(table.to_json())
    elif args.format == "grid":
        sys.stdout.write(table.grid())
    else:
        sys.stdout.write(table.to_tsv())
    return EXIT_OK


def cmd_search(args) -> int:
    mode = "random" if args.random is not None else ("exhaustive" if args.exhaustive else "auto")
    res = max_ntrop(args.p, args.d, mode=mode, budget=args.random, threads=args.threads,
                    witnesses=args.witnesses, seed=args.seed, symmetry=not args.no_symmetry)
    upper = mcmullen_U(args.p + args.d, args.d - 1)
    if args.json:
        print(json.dumps({
            "p": res.p, "d": res.d, "max": res.max_count, "upper": upper,
            "exhaustive": res.exhaustive, "scanned": res.patterns_scanned,
            "witnesses": res.witness_bitstrings(),
        }, indent=2))
    else:
        kind = "exact" if res.exhaustive else "lower bound"
        print(f"p={res.p} d={res.d} max={res.max_count} ({kind}) upper={upper}")
        print(f"scanned {res.patterns_scanned} patterns in {res.elapsed:.2f}s")
        for w in res.witnesses:
            print(w.bitstring())
    return EXIT_OK


def cmd_verify(args) -> int:
    results = run_suite(args.suite)
    for r in results:
        print(r.line(), flush=True)
    failed = sum(not r.ok for r in results)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return EXIT_FAILED if failed else EXIT_OK


def cmd_deform_check(args) -> int:
    pattern = _read_pattern(args.pattern)
    spec = SignedCyclicSpec(pattern, _int_list(args.t) if args.t else None)
    sys_ = build_polar(spec)
    vectors = [canonical(_int_list(args.x))] if args.x else [r.coords for r in enumerate_rays_with_paths(spec)]
    ok = True
    for x in vectors:
        for beta in args.beta:
            member = deformed_member(sys_, x, beta)
            sandwich = lse_sandwich_check(x, beta)
            margin = min(deformed_row_margins(sys_, x, beta))
            ok &= member and sandwich
            print(f"{_fmt(x)} beta={beta:g} member={str(member).lower()} "
                  f"sandwich={str(sandwich).lower()} margin={margin:.6g}")
    return EXIT_OK if ok else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tropcyclic", description="Signed cyclic tropical cones and lattice paths.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count tropically allowed and allowed paths")
    p.add_argument("pattern", help="pattern file, or - for stdin")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="extreme rays of the polar cone")
    p.add_argument("pattern")
    p.add_argument("--t", nargs="+", metavar="T", help="strictly increasing integers (default 0..p-1)")
    p.add_argument("--art", action="store_true", help="print path pictures instead of JSON")
    p.add_argument("--oracle", action="store_true", help="cross-check with the brute-force oracle")
    p.add_argument("--json", action="store_true", help="JSON output (the default)")
    p.add_argument("--compact", action="store_true", help="single-line JSON")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("table", help="maximal path counts next to the upper bound")
    p.add_argument("--p-min", type=int, default=1)
    p.add_argument("--p-max", type=int, required=True)
    p.add_argument("--d-min", type=int, default=3)
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--mode", choices=["auto", "exhaustive", "random", "formula-only"], default="auto")
    p.add_argument("--format", choices=["tsv", "json", "grid"], default="tsv")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--budget", type=int, default=None, help="patterns per random cell")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("search", help="maximize the path count over p x d patterns")
    p.add_argument("p", type=int)
    p.add_argument("d", type=int)
    how = p.add_mutually_exclusive_group()
    how.add_argument("--exhaustive", action="store_true")
    how.add_argument("--random", type=int, metavar="N", help="randomized search with a budget of N patterns")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--witnesses", type=int, default=1)
    p.add_argument("--no-symmetry", action="store_true", help="disable the reversal reduction")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="run a self-check suite")
    p.add_argument("suite", choices=[*SUITES, "all"])
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("deform-check", help="exponential deformation checks on rays")
    p.add_argument("pattern")
    p.add_argument("--t", nargs="+", metavar="T")
    p.add_argument("--x", nargs="+", metavar="X", help="check this vector instead of the rays")
    p.add_argument("--beta", nargs="+", type=float, default=[1.0, 4.0, 16.0])
    p.set_defaults(func=cmd_deform_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    # argparse would read a bare -inf as an option
    args = parser.parse_args(["⊥" if a == "-inf" else a for a in argv])
    try:
        return args.func(args)
    except (GuardError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (PatternParseError, ValueError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
