"""Command-line interface: ``gvlocal <command> ...``."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from gvlocal import tables
from gvlocal.ade import CASES, OverrideRequiredError, get_case
from gvlocal.io import InvariantFileError, read_table, write_table
from gvlocal.transform import (
    CapExceededError,
    LocalMultiplicities,
    divisors,
    gv_from_gw_all_genus,
    gv_from_gw_genus0,
    gw_from_gv,
    integrality_check,
    local_contribution,
)


def _load(path: str, kind: str):
    table = read_table(path)
    if table.kind != kind:
        raise InvariantFileError(f"{path}: expected kind {kind!r}, found {table.kind!r}")
    return table


def cmd_gv2gw(args) -> int:
    gv = _load(args.input, "gv")
    write_table(gw_from_gv(gv), args.output)
    return 0


def cmd_gw2gv(args) -> int:
    gw = _load(args.input, "gw")
    gv = gv_from_gw_genus0(gw) if args.genus0_only else gv_from_gw_all_genus(gw)
    write_table(gv, args.output)
    report = integrality_check(gv)
    print(report.summary(), file=sys.stderr)
    return 1 if args.strict and not report.passed else 0


def _parse_overrides(items: list[str]) -> dict[int, dict[int, int]]:
    out: dict[int, dict[int, int]] = {}
    for item in items:
        try:
            k, rest = item.split(":")
            j, order = rest.split("=")
            out.setdefault(int(k), {})[int(j)] = int(order)
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad override {item!r}; expected K:J=ORDER") from None
    return out


def cmd_ade(args) -> int:
    case = get_case(args.case)
    overrides = _parse_overrides(args.override) if args.override else None
    if args.json:
        doc = {"case": args.case,
               "singularity": next(r for r in tables.singularity_rows() if r["case"] == case.name),
               "degrees": tables.degree_rows(case, overrides)}
        if args.table:
            doc["local_tables"] = {f"A{k}": tables.ak_rows(k) for k in _table_ks(case)}
        print(json.dumps(doc, indent=2, sort_keys=True))
        return 0
    if args.table:
        for k in _table_ks(case):
            print(tables.ak_text(k))
            print()
    if args.j is not None and not 1 <= args.j <= case.length - 1:
        print(f"error: --j must lie in 1..{case.length - 1} for {case.name}", file=sys.stderr)
        return 2
    print(tables.degree_text(case, overrides, args.j))
    return 0


def _table_ks(case) -> list[int]:
    ks = set(case.residual_singularities) - set(case.nonstandard)
    if case.singularity.startswith("A"):
        ks.add(int(case.singularity[1:]))
    return sorted(ks)


def cmd_local_contrib(args) -> int:
    mult = [int(x) for x in args.mult.split(",")]
    if len(mult) != args.length:
        print(f"error: --mult has {len(mult)} entries but --length is {args.length}", file=sys.stderr)
        return 2
    m = LocalMultiplicities(tuple(mult))
    terms = [f"n{args.d // k}/{k}^3" for k in divisors(args.d)]
    print(f"N_{args.d}[C] = " + " + ".join(terms) + f" = {local_contribution(m, args.d)}")
    return 0


def cmd_audit(args) -> int:
    indices = [args.i] if args.i is not None else range(1, 7)
    if args.json:
        print(json.dumps([{"i": i, "LC": args.LC, "rows": tables.audit_rows(i, args.LC)}
                          for i in indices], indent=2, sort_keys=True))
    else:
        print("\n".join(tables.audit_text(i, args.LC) for i in indices))
    return 0


def make_paper_tables(target: Path) -> list[Path]:
    target.mkdir(parents=True, exist_ok=True)
    written = []

    def put(name: str, text: str):
        path = target / name
        path.write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
        written.append(path)

    put("singularities.txt", tables.singularity_text())
    put("singularities.json", json.dumps(tables.singularity_rows(), indent=2, sort_keys=True))
    put("ak_tables.txt", "\n\n".join(tables.ak_text(k) for k in range(1, 5)))
    put("ak_tables.json", json.dumps({f"A{k}": tables.ak_rows(k) for k in range(1, 5)},
                                     indent=2, sort_keys=True))
    put("degrees.txt", "\n".join(tables.degree_text(c) for c in CASES.values()))
    put("degrees.json", json.dumps({c.name: tables.degree_rows(c) for c in CASES.values()},
                                   indent=2, sort_keys=True))
    put("multiple_cover.txt", tables.multiple_cover_text())
    put("multiple_cover.json", json.dumps(tables.multiple_cover_rows(), indent=2, sort_keys=True))
    put("stability.txt", "\n".join(tables.audit_text(i, lc) for lc in range(1, 6) for i in range(1, 7)))
    put("stability.json", json.dumps({f"i={i},LC={lc}": tables.audit_rows(i, lc)
                                      for lc in range(1, 6) for i in range(1, 7)},
                                     indent=2, sort_keys=True))
    put("moduli.txt", tables.moduli_text())
    return written


def cmd_make_paper_tables(args) -> int:
    for path in make_paper_tables(Path(args.target)):
        print(path)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gvlocal", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gv2gw", help="expand a GV table into GW invariants")
    p.add_argument("input")
    p.add_argument("output")
    p.set_defaults(func=cmd_gv2gw)

    p = sub.add_parser("gw2gv", help="invert a GW table into GV invariants")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--genus0-only", action="store_true", help="genus-0 Moebius inversion only")
    p.add_argument("--strict", action="store_true", help="exit nonzero if integrality fails")
    p.set_defaults(func=cmd_gw2gv)

    p = sub.add_parser("ade", help="local computations for a contraction case")
    p.add_argument("case", choices=sorted(CASES))
    p.add_argument("--j", type=int)
    p.add_argument("--table", action="store_true", help="print the A_k symbolic power tables")
    p.add_argument("--json", action="store_true")
    p.add_argument("--override", action="append", metavar="K:J=ORDER",
                   help="vanishing order for the A_K point at step J (replaces the default A4 orders)")
    p.set_defaults(func=cmd_ade)

    p = sub.add_parser("local-contrib", help="genus-0 contribution of a contractible curve")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--mult", required=True, help="comma-separated n_1,...,n_l")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_local_contrib)

    p = sub.add_parser("audit", help="stability inequalities for O_{C_i}")
    p.add_argument("--i", type=int)
    p.add_argument("--LC", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("make-paper-tables", help="write every table into a directory")
    p.add_argument("target")
    p.set_defaults(func=cmd_make_paper_tables)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InvariantFileError, CapExceededError, OverrideRequiredError,
            argparse.ArgumentTypeError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
