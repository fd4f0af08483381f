"""Command-line entry point: ``spinunip {count,enumerate,cells,chartable,calibrate}``."""

from __future__ import annotations

import argparse
import json
import sys

from spinunip.counting import VERIFY_HARD_MAX_N, VerificationError, classify, classify_many, member_evaluations
from spinunip.orbits import (
    ComplexSpin,
    InvalidInput,
    all_rows_even_multiplicity,
    group_families,
    orbits_of,
    parse_group,
    parse_orbit,
    rank,
    row_split,
)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_MISMATCH = 3

TABLE_HEADER = ("group", "orbit", "count_tilde", "count_g", "sgn_twist_fixed", "verified")


def _parse_orbit_arg(g, text: str):
    if isinstance(g, ComplexSpin):
        parts = text.split(";")
        if len(parts) != 2:
            raise InvalidInput("a SpinC orbit is two diagrams separated by ';'")
        return tuple(parse_orbit(x) for x in parts)
    if ";" in text:
        raise InvalidInput("';' separated orbit pairs are only for SpinC")
    return parse_orbit(text)


def _verify_flag(args) -> bool | None:
    return getattr(args, "verify", None)


def run_count(args) -> int:
    g = parse_group(args.group)
    o = _parse_orbit_arg(g, args.orbit)
    report = classify(g, o, _verify_flag(args))
    print(report.render() if args.json else report.text())
    return EXIT_OK


def _orbit_cell(report) -> str:
    orbit = report.orbit
    items = orbit if isinstance(orbit, list) else [orbit]
    out = []
    for d in items:
        shape = ",".join(map(str, d["shape"])) or "0"
        out.append(shape + (f":{d['label']}" if d.get("label") else ""))
    return ";".join(out)


def _enumeration_items(args):
    if args.group:
        g = parse_group(args.group)
        if args.max_n is not None and rank(g) > args.max_n:
            raise InvalidInput(f"{g} has rank {rank(g)} > --max-n {args.max_n}")
        groups = [g]
    else:
        if args.max_n is None:
            raise InvalidInput("enumerate needs --group or --max-n")
        groups = [g for m in range(3, 2 * args.max_n + 2) for g in group_families(m)]
    items = []
    for g in groups:
        for o in orbits_of(g):
            pair = o if isinstance(o, tuple) else (o,)
            if args.all or all(all_rows_even_multiplicity(x) for x in pair):
                items.append((g, o))
    return items


def run_enumerate(args) -> int:
    items = _enumeration_items(args)
    reports = classify_many(items, _verify_flag(args), threads=args.threads)
    if args.json:
        print(json.dumps([r.to_json() for r in reports], ensure_ascii=False, sort_keys=True))
        return EXIT_OK
    print("\t".join(TABLE_HEADER))
    for r in reports:
        row = (r.group, _orbit_cell(r), r.count_tilde, r.count_g, r.sgn_twist_fixed, r.verified)
        print("\t".join(str(x) for x in row))
    return EXIT_OK


def run_cells(args) -> int:
    g = parse_group(args.group)
    o = parse_orbit(args.orbit)
    if isinstance(g, ComplexSpin):
        raise InvalidInput("cells are attached to real and quaternionic groups")
    split = row_split(o, g)
    from spinunip.coherent import build_cell

    cell = build_cell(split, o.label)
    mults = member_evaluations(g, o)
    data = {
        "group": str(g),
        "orbit": o.to_json(),
        "row_split": split.to_json(),
        "cell": cell.to_json(),
        "multiplicities": [mults[wp] for wp in cell.members],
        "total": sum(mults.values()),
    }
    if args.json:
        print(json.dumps(data, ensure_ascii=False, sort_keys=True))
        return EXIT_OK
    print(f"{g} {o}: nb={split.nb} ng={split.ng} parity={split.parity}")
    print(f"primitive pairs = {list(cell.pp)}")
    print(f"tau_b = {cell.taub}")
    for wp, tau in cell.members.items():
        print(f"  wp={sorted(wp)}  tau={tau}  multiplicity={mults[wp]}")
    print(f"total = {data['total']}")
    return EXIT_OK


def run_chartable(args) -> int:
    from spinunip.weylrep.characters import character_table
    from spinunip.weylrep.classes import conjugacy_classes

    n = args.n
    if n < 0 or n > VERIFY_HARD_MAX_N:
        raise InvalidInput(f"chartable supports 0 <= n <= {VERIFY_HARD_MAX_N}")
    classes = conjugacy_classes(n)
    table = character_table(n)
    data = {
        "n": n,
        "classes": [{"positive": list(c.positive), "negative": list(c.negative), "size": size} for c, size in classes],
        "characters": [
            {"left": list(bp.left), "right": list(bp.right), "values": [int(v) for v in chi.values]}
            for bp, chi in table.items()
        ],
    }
    print(json.dumps(data, sort_keys=True))
    return EXIT_OK


def run_calibrate(args) -> int:
    from spinunip.weylrep.calibration import calibrate_eta, calibration_payload, write_calibration

    eta, reports = calibrate_eta()
    payload = write_calibration(args.out, eta) if args.out else calibration_payload(eta)
    if args.json or not args.out:
        payload = dict(payload)
        payload["candidates"] = [
            {"name": r.eta.name, "passes_t1": r.passes_t1, "equal_shape_ok": {str(t): ok for t, ok in r.equal_shape_ok.items()}}
            for r in reports
        ]
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(f"wrote {args.out}: {eta.name}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spinunip", description="Per-orbit unipotent counts for spin groups and their double covers.")
    sub = parser.add_subparsers(dest="command", required=True)

    def verify_flags(p):
        p.add_argument("--verify", dest="verify", action="store_true", default=None,
                       help=f"reconcile with the cell-theoretic count (rank <= {VERIFY_HARD_MAX_N})")
        p.add_argument("--no-verify", dest="verify", action="store_false")

    p = sub.add_parser("count", help="counts for one group and dual orbit")
    p.add_argument("--group", required=True, help='e.g. "Spin(3,2)", "Spin*(8)", "SpinC(7)"')
    p.add_argument("--orbit", required=True, help='e.g. "2,2", "2,2,2,2:I"; SpinC takes "a;b"')
    verify_flags(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=run_count)

    p = sub.add_parser("enumerate", help="table over all dual orbits")
    p.add_argument("--group")
    p.add_argument("--max-n", type=int, help="rank bound; without --group, every family up to this rank")
    p.add_argument("--all", action="store_true", help="include orbits with a row of odd multiplicity")
    p.add_argument("--threads", type=int, default=1)
    verify_flags(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=run_enumerate)

    p = sub.add_parser("cells", help="left cell members and their multiplicities")
    p.add_argument("--group", required=True)
    p.add_argument("--orbit", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=run_cells)

    p = sub.add_parser("chartable", help="character table of W_n as JSON")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=run_chartable)

    p = sub.add_parser("calibrate", help="select eta and optionally write the calibration file")
    p.add_argument("--out")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=run_calibrate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    try:
        return args.func(args)
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (InvalidInput, ValueError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
