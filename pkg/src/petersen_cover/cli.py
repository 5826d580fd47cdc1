"""Command line entry point: ``petersen-cover <command> ...``.

Exit status is 0 on success, 1 on any violation or failed check, 2 on bad
arguments and 3 when a sweep leaves pairs unresolved within its budget.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .bounds import CSV_HEADER, bound_report
from .constructions import best_construction
from .cover import Cover, is_cover, uncovered_edge
from .errors import CoverDomainError, ParameterError, ResourceLimitError
from .graph import PetersenGraph
from .harness import FORMATS, export, sweep, verify_theorems
from .solver import DEFAULT_NODE_BUDGET, beta_exact


def _graph(args):
    return PetersenGraph(args.n, args.k)


def cmd_beta(args):
    res = beta_exact(_graph(args), node_budget=args.budget)
    print(res.to_json())
    return 0


def cmd_cover(args):
    g = _graph(args)
    if args.method == "construction":
        res = best_construction(g)
        print(json.dumps(res.to_certificate()))
        return 0
    if args.method == "auto":
        res = best_construction(g)
        if res.size == bound_report(g.n, g.k).lower:
            print(json.dumps(res.to_certificate(optimal=True)))
            return 0
    sol = beta_exact(g, node_budget=args.budget)
    print(sol.witness.to_json(method=sol.method, optimal=True))
    return 0


def cmd_verify_cover(args):
    g = _graph(args)
    cert = json.loads(Path(args.cert).read_text())
    c = Cover.from_certificate(cert)
    if (c.n, c.k) != (g.n, g.k):
        print(f"certificate is for P({c.n},{c.k}), not P({g.n},{g.k})")
        return 1
    if not is_cover(g, c):
        e = uncovered_edge(g, c)
        print(f"INVALID: edge {e.a}-{e.b} ({e.kind}) is not covered")
        return 1
    print(f"VALID: cover of P({g.n},{g.k}) with {c.size} vertices")
    return 0


def cmd_bounds(args):
    rep = bound_report(args.n, args.k)
    if args.csv:
        print(CSV_HEADER)
        print(rep.csv_row())
    else:
        print(json.dumps(rep.to_dict(), indent=2))
    return 0


def cmd_sweep(args):
    summary = sweep(args.max_n, cache=args.resume, jobs=args.jobs, node_budget=args.budget)
    print(json.dumps(summary.to_dict(), indent=2))
    if not summary.ok:
        return 1
    return 3 if summary.unresolved else 0


def cmd_verify_theorems(args):
    rep = verify_theorems(args.max_n, samples=args.samples, seed=args.seed)
    for line in rep.lines():
        print(line)
    for suite, msgs in rep.failures.items():
        for msg in msgs[:20]:
            print(f"  {suite}: {msg}")
    return 0 if rep.ok else 1


def cmd_export(args):
    cover = None
    if args.format == "certificate":
        cover = beta_exact(_graph(args)).witness
    text = export(args.n, args.k, args.format, cover=cover, out=args.out)
    if args.out is None:
        sys.stdout.write(text)
    return 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="petersen-cover", description="Minimum vertex covers of generalized Petersen graphs."
    )
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def nk(sp):
        sp.add_argument("n", type=int)
        sp.add_argument("k", type=int)

    sp = sub.add_parser("beta", help="exact beta(P(n,k)) with a witness")
    nk(sp)
    sp.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    sp.set_defaults(func=cmd_beta)

    sp = sub.add_parser("cover", help="emit a cover certificate")
    nk(sp)
    sp.add_argument("--method", choices=("solver", "construction", "auto"), default="auto")
    sp.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    sp.set_defaults(func=cmd_cover)

    sp = sub.add_parser("verify-cover", help="check a cover certificate")
    nk(sp)
    sp.add_argument("--cert", required=True)
    sp.set_defaults(func=cmd_verify_cover)

    sp = sub.add_parser("bounds", help="lower/upper bounds and exact formulas")
    nk(sp)
    sp.add_argument("--csv", action="store_true")
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("sweep", help="check beta <= n + ceil(n/5) for all 2k < n <= N")
    sp.add_argument("--max-n", type=int, required=True)
    sp.add_argument("--resume", default=None, help="JSON-lines results cache")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("verify-theorems", help="run the cover-calculus property suites")
    sp.add_argument("--max-n", type=int, required=True)
    sp.add_argument("--samples", type=int, default=200)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_verify_theorems)

    sp = sub.add_parser("export", help="write P(n,k) as DIMACS/JSON or a minimum-cover certificate")
    nk(sp)
    sp.add_argument("--format", choices=FORMATS, required=True)
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_export)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (ParameterError, CoverDomainError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except ResourceLimitError as err:
        print(f"error: {err} (bounds: {err.lower}..{err.upper})", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
