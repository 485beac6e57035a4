"""Command line front end: ``elep check|tree|family|realize|scan``.

Exit codes: 0 success, 1 valid input with a negative answer, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .core import ElepPair, NotElepPair, check_sides, metrics
from .emit import (
    family_csv,
    frac,
    num,
    realization_record,
    realization_svg,
    tree_csv,
    tree_dot,
    tree_json,
)
from .families import (
    errata_for,
    horizontal_family,
    vertical_side2_family,
    vertical_side4_family,
)
from .search import SCAN_LIMIT, realize, scan
from .tree import enumerate_tree

MAX_TREE_DEPTH = 12
MAX_FAMILY_COUNT = 40


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {v}")
    return v


def _write(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _dump(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=1) + "\n")


def _usage(parser: argparse.ArgumentParser, msg: str) -> int:
    parser.print_usage(sys.stderr)
    print(f"{parser.prog}: error: {msg}", file=sys.stderr)
    return 2


def check_payload(a: int, b: int) -> dict:
    a, b = min(a, b), max(a, b)
    if a == b:
        return {"valid": False, "reason": "equal sides: no equable rhombus exists"}
    disc = check_sides(a, b)
    if disc is None:
        return {"valid": False, "reason": "9a^2b^2 - 12(a+b)^2 is not a perfect square"}
    pair = ElepPair.from_sides(a, b)
    m = metrics(pair)
    return {
        "valid": True,
        "a": num(a),
        "b": num(b),
        "disc": num(disc),
        "s": num(pair.s),
        "t": num(pair.t),
        "sigma": pair.sigma,
        "dl_sq": num(m.dl_sq),
        "ds_sq": num(m.ds_sq),
        "h_l": frac(m.h_l),
        "h_s": frac(m.h_s),
        "eta_l_sq": frac(m.eta_l_sq),
        "eta_s_sq": frac(m.eta_s_sq),
    }


def cmd_check(args, parser) -> int:
    payload = check_payload(args.a, args.b)
    _dump(payload)
    return 0 if payload["valid"] else 1


def cmd_tree(args, parser) -> int:
    if args.depth > MAX_TREE_DEPTH:
        return _usage(parser, f"--depth is limited to {MAX_TREE_DEPTH}")
    tree = enumerate_tree(args.depth, args.max_b)
    render = {"json": tree_json, "dot": tree_dot, "csv": tree_csv}[args.format]
    text = render(tree)
    _write(text if text.endswith("\n") else text + "\n", args.output)
    return 0


FAMILIES = {
    "horizontal": (0, horizontal_family),
    "vs2": (1, vertical_side2_family),
    "vs4a": (1, lambda n: vertical_side4_family(1, n)),
    "vs4b": (1, lambda n: vertical_side4_family(2, n)),
}


def cmd_family(args, parser) -> int:
    if args.count > MAX_FAMILY_COUNT:
        return _usage(parser, f"--count is limited to {MAX_FAMILY_COUNT}")
    start, build = FAMILIES[args.kind]
    members = [build(n) for n in range(start, start + args.count)]
    _write(family_csv(members), args.output)
    for m in members:
        for col, printed, built in errata_for(m.family_tag, m.index):
            print(
                f"note: {m.family_tag} n={m.index}: column {col} = {built} from the construction "
                f"formulas; the commonly printed value {printed} is inconsistent with them",
                file=sys.stderr,
            )
    return 0


def cmd_realize(args, parser) -> int:
    a, b = min(args.a, args.b), max(args.a, args.b)
    if a == b or check_sides(a, b) is None:
        _dump({"valid": False, "reason": f"({a}, {b}) is not an ELEP pair"})
        return 1
    r = realize(a, b)
    record = realization_record(r.v1, r.v2, ElepPair.from_sides(a, b))
    record["valid"] = True
    if args.svg:
        Path(args.svg).write_text(realization_svg(r.vertices, args.scale, args.labels), encoding="utf-8")
        record["svg"] = args.svg
    _dump(record)
    return 0


def scan_payload(report) -> dict:
    def pt(p):
        return [p.x, p.y]

    return {
        "max_coord": report.max_coord,
        "found": [
            {
                "a": f.a,
                "b": f.b,
                "v1": pt(f.representative.v1),
                "v2": pt(f.representative.v2),
                "count_of_congruence_classes": f.count_of_congruence_classes,
                "presentations": f.presentations,
                "flags": {k: getattr(f.flags, k) for k in f.flags.__dataclass_fields__},
            }
            for f in report.found
        ],
        "anomalies": [[pt(v1), pt(v2)] for v1, v2 in report.anomalies],
    }


def cmd_scan(args, parser) -> int:
    if args.max_coord > SCAN_LIMIT:
        return _usage(parser, f"max_coord is limited to {SCAN_LIMIT}")
    report = scan(args.max_coord, jobs=args.jobs)
    _dump(scan_payload(report))
    failed = bool(report.anomalies)
    for probe in args.expect_empty or []:
        bad = report.rhombi() if probe == "rhombus" else report.with_vertical_diagonal()
        if bad:
            print(f"expected no {probe} instances, found {[(f.a, f.b) for f in bad]}", file=sys.stderr)
            failed = True
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="elep", description="Equable parallelograms on the Eisenstein lattice.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="test a side pair (a, b)")
    p.add_argument("a", type=_positive)
    p.add_argument("b", type=_positive)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("tree", help="emit the tree of side pairs")
    p.add_argument("--depth", type=_nonneg, default=3)
    p.add_argument("--max-b", type=_positive, default=None)
    p.add_argument("--format", choices=["json", "dot", "csv"], default="json")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("family", help="tabulate a closed-form family")
    p.add_argument("kind", choices=sorted(FAMILIES))
    p.add_argument("--count", type=_positive, default=9)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("realize", help="explicit lattice vertices for (a, b)")
    p.add_argument("a", type=_positive)
    p.add_argument("b", type=_positive)
    p.add_argument("--svg")
    p.add_argument("--scale", type=float, default=40.0)
    p.add_argument("--labels", action="store_true")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("scan", help="exhaustive lattice search in a box")
    p.add_argument("max_coord", type=_nonneg)
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--expect-empty", action="append", choices=["rhombus", "vertical-diagonal"])
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except NotElepPair as exc:
        _dump({"valid": False, "reason": str(exc)})
        return 1


if __name__ == "__main__":
    sys.exit(main())
