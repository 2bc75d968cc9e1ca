"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 domain error (bad generators,
m not in S, below conductor, ...), 3 search budget exceeded (the best
bound found is printed with an ``uncertified`` marker).

The environment variable ``SGP_BUDGET`` overrides the default node budget
of the configuration search; ``SGP_BACKEND`` selects the numba or numpy
search kernel.  Identical inputs produce byte-identical output: sets are
sorted, witnesses are deterministic, field order is fixed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .bounds import hierarchy_table
from .dim2 import Dim2Semigroup
from .divisors import div_set, div_set_multi, new_divisors_via_apery
from .errors import BudgetExceeded, DomainError
from .fengrao import (DEFAULT_MAX_NODES, classical_fr, feng_rao_number,
                      generalized_fr)
from .render import Layer, StripSpec, render_strip
from .semigroup import NumericalSemigroup
from . import oracle

DESK_SCALE_LIMIT = 10 ** 6


class _Parser(argparse.ArgumentParser):
    """argparse that exits 1 (not 2) on usage errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(1)


def _gens(text: str) -> list[int]:
    try:
        gens = [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad generator list {text!r}")
    if not gens:
        raise argparse.ArgumentTypeError("empty generator list")
    return gens


def _range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split(":")
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}, expected LO:HI")


def _layer(text: str) -> tuple[str, list[int]]:
    name, _, values = text.partition("=")
    if not name or not values:
        raise argparse.ArgumentTypeError(
            f"bad layer {text!r}, expected name=V1,V2,...")
    try:
        return name, [int(v) for v in values.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad layer values in {text!r}")


def _semigroup(gens: list[int]) -> NumericalSemigroup:
    if len(gens) >= 2:
        lo, hi = min(gens), max(gens)
        if lo * hi > DESK_SCALE_LIMIT:
            raise DomainError(
                f"generators exceed desk scale (min*max = {lo * hi} > "
                f"{DESK_SCALE_LIMIT}); this tool targets table-sized inputs")
    return NumericalSemigroup.from_generators(gens)


def _budget(args) -> int:
    if args.budget is not None:
        return args.budget
    env = os.environ.get("SGP_BUDGET")
    return int(env) if env else DEFAULT_MAX_NODES


def build_parser() -> _Parser:
    parser = _Parser(prog="sgp", description=__doc__.splitlines()[0]
                     if __doc__ else "numerical semigroup toolbox")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(
        dest="command", required=True,
        metavar="{info,apery,divisors,fr,frgen,frnumber,ghw-table,draw}")

    def add(name, **kw):
        p = sub.add_parser(name, **kw)
        p.add_argument("--gens", type=_gens, required=True,
                       help="comma-separated generators, e.g. 7,11")
        return p

    p = add("info", help="semigroup invariants as JSON")

    p = add("apery", help="Apery set with respect to n")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = add("divisors", help="divisor set D(x), or new divisors of mbar+n")
    p.add_argument("-x", type=int, default=None, help="single target")
    p.add_argument("--set", type=_gens, default=None,
                   help="comma-separated target set for D(M)")
    p.add_argument("--mbar", type=int, default=None,
                   help="with -n: print D(mbar+n) minus D(mbar)")
    p.add_argument("-n", type=int, default=None)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = add("fr", help="classical Feng-Rao distance at m")
    p.add_argument("-m", type=int, required=True)

    p = add("frgen", help="generalized Feng-Rao distance at m, order r")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("--budget", type=int, default=None,
                   help="search node budget (default SGP_BUDGET or 10^7)")

    p = add("frnumber", help="Feng-Rao number E(S, r)")
    p.add_argument("-r", type=int, required=True)
    p.add_argument("--method", choices=["auto", "search"], default="auto")
    p.add_argument("--budget", type=int, default=None)

    p = add("ghw-table", help="GFR vs Griesmer order bound table")
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-q", type=int, required=True, help="field size")
    p.add_argument("--n", type=int, default=None, help="code length (adds k_m)")
    p.add_argument("--m-range", type=_range, required=True, metavar="LO:HI")
    p.add_argument("--format", choices=["csv", "md", "json"], default="csv")
    p.add_argument("--budget", type=int, default=None)

    p = add("draw", help="integer strip drawing")
    p.add_argument("--origin", type=int, required=True)
    p.add_argument("--rows", type=_range, required=True, metavar="LO:HI")
    p.add_argument("--layer", type=_layer, action="append", default=[],
                   metavar="NAME=V1,V2,...")
    p.add_argument("--format", choices=["text", "svg"], default="text")

    # cross-checking front end for the brute-force reference path
    p = sub.add_parser("oracle")
    osub = p.add_subparsers(dest="oracle_command", required=True)
    for name in ("contains", "apery", "divisors", "frgen"):
        op = osub.add_parser(name)
        op.add_argument("--gens", type=_gens, required=True)
        if name == "contains":
            op.add_argument("-x", type=int, required=True)
        elif name == "apery":
            op.add_argument("-n", type=int, required=True)
        elif name == "divisors":
            op.add_argument("-x", type=int, default=None)
            op.add_argument("--set", type=_gens, default=None)
        else:
            op.add_argument("-m", type=int, required=True)
            op.add_argument("-r", type=int, required=True)
            op.add_argument("--window", type=int, required=True)
    return parser


def _print_set(values, fmt: str, label: dict) -> None:
    if fmt == "json":
        print(json.dumps({**label, "elements": list(values),
                          "cardinality": len(values)}))
    else:
        print(" ".join(str(v) for v in values))
        print(f"cardinality {len(values)}")


def _cmd_apery(args) -> int:
    S = _semigroup(args.gens)
    if S.embedding_dimension == 2:
        s2 = Dim2Semigroup(*S.minimal_generators)
        values = s2.apery_closed(args.n)
    else:
        values = S.apery(args.n)
    _print_set(values, args.format,
               {"generators": list(S.generators), "n": args.n})
    return 0


def _cmd_divisors(args) -> int:
    S = _semigroup(args.gens)
    if args.mbar is not None or args.n is not None:
        if args.mbar is None or args.n is None:
            raise DomainError("new-divisor mode needs both --mbar and -n")
        if S.embedding_dimension == 2:
            s2 = Dim2Semigroup(*S.minimal_generators)
            values = s2.new_divisors(args.mbar, args.n)
        else:
            values = new_divisors_via_apery(S, args.mbar, args.n)
        label = {"generators": list(S.generators),
                 "mbar": args.mbar, "n": args.n}
    elif args.set is not None:
        values = list(div_set_multi(S, args.set))
        label = {"generators": list(S.generators), "targets": sorted(set(args.set))}
    elif args.x is not None:
        values = list(div_set(S, args.x))
        label = {"generators": list(S.generators), "x": args.x}
    else:
        raise DomainError("divisors needs -x, --set, or --mbar with -n")
    _print_set(values, args.format, label)
    return 0


def _cmd_oracle(args) -> int:
    if args.oracle_command == "contains":
        print(json.dumps({"x": args.x,
                          "contains": oracle.naive_contains(args.gens, args.x)}))
    elif args.oracle_command == "apery":
        values = oracle.naive_apery(args.gens, args.n)
        _print_set(values, "text", {})
    elif args.oracle_command == "divisors":
        target = args.x if args.x is not None else args.set
        if target is None:
            raise DomainError("oracle divisors needs -x or --set")
        values = oracle.naive_divisors(args.gens, target)
        _print_set(values, "text", {})
    else:
        res = oracle.naive_generalized_fr(args.gens, args.m, args.r, args.window)
        print(json.dumps({"m": args.m, "r": args.r, "value": res.value,
                          "witness": list(res.witness),
                          "certified": res.certified}))
    return 0


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "info":
            print(json.dumps(_semigroup(args.gens).descriptor()))
        elif args.command == "apery":
            return _cmd_apery(args)
        elif args.command == "divisors":
            return _cmd_divisors(args)
        elif args.command == "fr":
            res = classical_fr(_semigroup(args.gens), args.m)
            print(json.dumps(res.descriptor()))
        elif args.command == "frgen":
            res = generalized_fr(_semigroup(args.gens), args.m, args.r,
                                 max_nodes=_budget(args))
            print(json.dumps(res.descriptor()))
        elif args.command == "frnumber":
            num = feng_rao_number(_semigroup(args.gens), args.r,
                                  method=args.method, max_nodes=_budget(args))
            print(json.dumps({"generators": sorted(set(args.gens)),
                              "r": num.r, "value": num.value,
                              "method": num.method}))
        elif args.command == "ghw-table":
            table = hierarchy_table(_semigroup(args.gens), args.r, args.q,
                                    args.m_range, args.n,
                                    max_nodes=_budget(args))
            if args.format == "csv":
                sys.stdout.write(table.to_csv())
            elif args.format == "md":
                sys.stdout.write(table.to_markdown())
            else:
                print(table.to_json())
        elif args.command == "draw":
            a, b = sorted(args.gens)[:2] if len(args.gens) >= 2 else (1, args.gens[0])
            layers = tuple(Layer(name, frozenset(values))
                           for name, values in args.layer)
            spec = StripSpec(a, b, args.origin, args.rows, layers)
            sys.stdout.write(render_strip(spec, args.format))
        elif args.command == "oracle":
            return _cmd_oracle(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: best bound {exc.best_value} (uncertified); "
              f"witness {list(exc.witness or ())}", file=sys.stderr)
        return 3
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:  # oracle front end validation
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def main() -> None:
    sys.exit(run())
