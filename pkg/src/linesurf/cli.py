"""Command-line interface: invariants, graph, local, verify, catalog.

Exit codes: 0 success, 1 verification mismatch, 2 usage or validation error.
JSON output is deterministic (sorted keys); integers whose magnitude exceeds
2^53 are serialized as decimal strings so downstream double-based JSON
parsers cannot corrupt them.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import __version__
from .arrangement import (
    CATALOG_NAMES,
    Profile,
    catalog_profile,
    parse_arrangement,
    profile_of,
    validate_profile,
)
from .errors import BadParameter, LineSurfError
from .local import canonical_coefficients, local_invariants
from .resolution import build_resolution_graph, to_dot
from .surface import global_invariants, hodge_diamond, verdict
from .verify import sweep_verify

_SAFE_INT = 2 ** 53


def _jsonable(value):
    """Convert to JSON-safe primitives; big integers become strings."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value if abs(value) < _SAFE_INT else str(value)
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, str):
        return value
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _dump(payload) -> str:
    return json.dumps(_jsonable(payload), sort_keys=True, indent=2)


def _parse_t_pairs(pairs) -> dict[int, int]:
    t: dict[int, int] = {}
    for pair in pairs or ():
        try:
            r_text, count_text = pair.split("=", 1)
            r, count = int(r_text), int(count_text)
        except ValueError:
            raise BadParameter(f"--t expects r=count, got {pair!r}") from None
        if r in t:
            raise BadParameter(f"multiplicity {r} given twice")
        t[r] = count
    return t


def _resolve_input(args) -> tuple[Profile, Optional[int], dict]:
    """Return (profile, q, input-echo) from exactly one input source."""
    sources = [s for s, given in (
        ("input", args.input is not None),
        ("profile", args.profile),
        ("catalog", args.catalog is not None),
    ) if given]
    if len(sources) != 1:
        raise BadParameter("give exactly one of --input, --profile, --catalog")

    q: Optional[int] = None
    if args.input is not None:
        profile = profile_of(parse_arrangement(Path(args.input).read_text()))
        source = f"file:{args.input}"
    elif args.profile:
        if args.d is None:
            raise BadParameter("--profile requires --d")
        profile = validate_profile(args.d, _parse_t_pairs(args.t))
        source = "profile-flags"
    else:
        params = [v for v in (args.m, args.n, args.d) if v is not None]
        if len(params) > 1:
            raise BadParameter("give at most one of --m, --n, --d with --catalog")
        entry = catalog_profile(args.catalog, params[0] if params else None)
        profile, q = entry.profile, entry.q
        source = f"catalog:{entry.name}"

    if args.q is not None:
        if q is not None and q != args.q:
            print(f"warning: --q {args.q} overrides catalog q={q}", file=sys.stderr)
        q = args.q
    echo = {"source": source, "d": profile.d,
            "t": {str(r): c for r, c in profile.t}, "q": q}
    return profile, q, echo


def _build_report(profile: Profile, q: Optional[int], echo: dict) -> dict:
    gi = global_invariants(profile)
    v = verdict(profile)
    report = {
        "input": echo,
        "k2_bar": gi.k2_bar,
        "chi_bar": gi.chi_bar,
        "my_bar": gi.my_bar,
        "c1_sq": gi.c1sq,
        "c2": gi.c2,
        "my_tilde": gi.my_tilde,
        "chern_ratio": gi.chern_ratio,
        "verdict": asdict(v),
        "hodge": None,
        "local": [
            {"r": r, "t_r": c, **{k: getattr(local_invariants(r, profile.d), k)
                                  for k in ("dci", "dcii", "dmy", "e")}}
            for r, c in profile.t
        ],
        "version": __version__,
    }
    if q is not None:
        hd = hodge_diamond(profile, q)
        report["hodge"] = {"q": hd.q, "pg": hd.pg, "h11": hd.h11}
    return report


def _print_table(report: dict) -> None:
    echo = report["input"]
    print(f"input: {echo['source']}  d={echo['d']}  "
          f"t={{{', '.join(f'{r}: {c}' for r, c in sorted(echo['t'].items(), key=lambda kv: int(kv[0])))}}}")
    for key in ("k2_bar", "chi_bar", "my_bar", "c1_sq", "c2", "my_tilde"):
        print(f"{key:10s} {report[key]}")
    ratio = report["chern_ratio"]
    print(f"{'ratio':10s} {ratio if ratio is not None else 'undefined (c2 = 0)'}")
    v = report["verdict"]
    print(f"verdict: pencil={v['pencil']} my_sign={v['my_sign']} "
          f"general_type={v['general_type']} ({v['reason']})")
    print("  r  t_r        DCI       DCII        DMY          E")
    for row in report["local"]:
        print(f"{row['r']:3d} {row['t_r']:4d} {row['dci']:10d} {row['dcii']:10d} "
              f"{row['dmy']:10d} {row['e']:10d}")
    if report["hodge"] is not None:
        h = report["hodge"]
        print(f"hodge: q={h['q']} pg={h['pg']} h11={h['h11']}")
    else:
        print("hodge: requires q")


def cmd_invariants(args) -> int:
    profile, q, echo = _resolve_input(args)
    report = _build_report(profile, q, echo)
    if args.format == "json":
        print(_dump(report))
    else:
        _print_table(report)
    return 0


def cmd_graph(args) -> int:
    graph = build_resolution_graph(args.r, args.d)
    print(f"shape: {graph.shape}")
    print(f"vertices: {graph.vertex_count}")
    if graph.central is not None:
        print(f"central: genus={graph.central[0]} b={graph.central[1]}")
    print(f"lambda: {graph.lam}")
    print(f"arm weights: {list(graph.arms[0])}")
    if args.dot is not None:
        Path(args.dot).write_text(to_dot(graph))
        print(f"dot written to {args.dot}")
    return 0


def cmd_local(args) -> int:
    inv = local_invariants(args.r, args.d)
    cc = canonical_coefficients(args.r, args.d)
    print(_dump({
        "r": args.r, "d": args.d,
        "dci": inv.dci, "dcii": inv.dcii, "dmy": inv.dmy, "e": inv.e,
        "shape": cc.shape, "coefficients": list(cc.values),
    }))
    return 0


def cmd_verify(args) -> int:
    reports = sweep_verify(args.r_max, args.d_max)
    mismatches = [rep for rep in reports if not rep.ok]
    if args.json:
        print(_dump({"pairs": len(reports), "mismatches": len(mismatches),
                     "reports": [asdict(rep) for rep in reports]}))
    elif mismatches:
        print("  r   d  coeffs  dci  dcii")
        for rep in mismatches:
            print(f"{rep.r:3d} {rep.d:3d}  {rep.coefficients_match!s:6s} "
                  f"{rep.dci_match!s:4s} {rep.dcii_match!s}")
    else:
        print(f"all {len(reports)} pairs match")
    return 1 if mismatches else 0


def cmd_catalog(args) -> int:
    rows = [
        ("hesse", "d=12, t_2=12, t_4=9, q=3"),
        ("ceva --m M (M>=2)", "d=3M; M=3: t_3=12; else t_3=M^2, t_M=3; q=2 if 3|M else 1"),
        ("braid --n N (N>=2)", "d=N(N+1)/2, t_3=C(N+1,3), t_2=(N+1)N(N-1)(N-2)/8; q=1 if N in {2,3} else 0"),
        ("pencil --d D (D>=2)", "t_D=1"),
        ("near-pencil --d D (D>=3)", "t_{D-1}=1, t_2=D-1"),
        ("generic --d D (D>=2)", "t_2=C(D,2)"),
    ]
    for name, desc in rows:
        print(f"{name:28s} {desc}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linesurf",
        description="Invariants of surfaces associated to line arrangements")
    parser.add_argument("--version", action="version", version=f"linesurf {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariants", help="global invariants of a profile")
    p_inv.add_argument("--input", metavar="FILE", help="line-list file")
    p_inv.add_argument("--profile", action="store_true", help="profile from --d/--t flags")
    p_inv.add_argument("--catalog", choices=CATALOG_NAMES, help="named profile")
    p_inv.add_argument("--d", type=int)
    p_inv.add_argument("--t", action="append", metavar="R=COUNT")
    p_inv.add_argument("--m", type=int, help="parameter for ceva")
    p_inv.add_argument("--n", type=int, help="parameter for braid")
    p_inv.add_argument("--q", type=int, help="irregularity (overrides catalog value)")
    p_inv.add_argument("--format", choices=("json", "table"), default="table")
    p_inv.set_defaults(func=cmd_invariants)

    p_graph = sub.add_parser("graph", help="resolution dual graph for one (r, d)")
    p_graph.add_argument("--r", type=int, required=True)
    p_graph.add_argument("--d", type=int, required=True)
    p_graph.add_argument("--dot", metavar="FILE", help="write DOT to FILE")
    p_graph.set_defaults(func=cmd_graph)

    p_local = sub.add_parser("local", help="local invariant quadruple for one (r, d)")
    p_local.add_argument("--r", type=int, required=True)
    p_local.add_argument("--d", type=int, required=True)
    p_local.set_defaults(func=cmd_local)

    p_verify = sub.add_parser("verify", help="oracle sweep against the closed forms")
    p_verify.add_argument("--r-max", type=int, required=True)
    p_verify.add_argument("--d-max", type=int, required=True)
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=cmd_verify)

    p_cat = sub.add_parser("catalog", help="list catalog entries")
    p_cat.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except LineSurfError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
