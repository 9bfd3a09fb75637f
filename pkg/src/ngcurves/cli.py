"""Command-line frontend.

Subcommands::

    ngcurves analyze A1 A2 [...]   classify one sequence
    ngcurves scan --n N --max M    exhaustive scan with classification verdict
    ngcurves movement A1 A2 [...]  print the covering-movement chain

Exit codes: 0 success, 2 usage or validation error, 3 --verify mismatch,
4 scan verdict failure, 5 no covering movement exists.
Output is byte-deterministic for fixed inputs and flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import classify, verification
from .canonical import find_movement, is_nearly_gorenstein, render_movement
from .classify import ClassificationRecord, ScanReport
from .curve import Curve, Sequence
from .errors import ValidationError

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VERIFY_MISMATCH = 3
EXIT_VERDICT_FAIL = 4
EXIT_NOT_NG = 5

CSV_COLUMNS = (
    "n",
    "sequence",
    "cm",
    "gorenstein",
    "nearly_gorenstein",
    "level",
    "cm_type",
    "vmin_size",
    "canonical_degrees",
    "movement",
)


def _bool(value: Optional[bool]) -> str:
    return "" if value is None else ("true" if value else "false")


def record_to_dict(record: ClassificationRecord) -> dict:
    out: dict = {"sequence": list(record.seq.values), "cm": record.cm}
    if record.cm:
        out["gorenstein"] = record.gorenstein
        out["nearly_gorenstein"] = record.nearly_gorenstein
        out["level"] = record.level
        out["cm_type"] = record.cm_type
        out["canonical_generators"] = [list(p) for p in record.canonical_gens]
        if record.movement is not None:
            out["movement"] = {
                "translates": [
                    {"u": list(t.u), "covered": list(t.covered)}
                    for t in record.movement.translates
                ]
            }
    elif record.witness is not None:
        out["witness"] = list(record.witness)
    return out


def record_to_csv_row(record: ClassificationRecord) -> list[str]:
    degrees = record.canonical_degrees
    return [
        str(record.seq.n),
        " ".join(map(str, record.seq.values)),
        _bool(record.cm),
        _bool(record.gorenstein),
        _bool(record.nearly_gorenstein),
        _bool(record.level),
        "" if record.cm_type is None else str(record.cm_type),
        "" if record.vmin_size is None else str(record.vmin_size),
        "" if degrees is None else " ".join(map(str, degrees)),
        ""
        if record.movement is None
        else " ".join(map(str, record.movement.movement)),
    ]


def record_to_text(record: ClassificationRecord) -> str:
    lines = [f"sequence: {' '.join(map(str, record.seq.values))}"]
    lines.append(f"cm: {_bool(record.cm)}")
    if record.cm:
        lines.append(f"gorenstein: {_bool(record.gorenstein)}")
        lines.append(f"nearly_gorenstein: {_bool(record.nearly_gorenstein)}")
        lines.append(f"level: {_bool(record.level)}")
        lines.append(f"cm_type: {record.cm_type}")
        gens = " ".join(f"({p.x},{p.y})" for p in record.canonical_gens)
        lines.append(f"canonical_generators: {gens}")
        lines.append(
            f"canonical_degrees: {' '.join(map(str, record.canonical_degrees))}"
        )
        lines.append(f"vmin_size: {record.vmin_size}")
        if record.movement is not None:
            lines.append(f"movement: {render_movement(record.movement, record.seq)}")
    else:
        if record.witness is not None:
            lines.append(f"witness: ({record.witness.x},{record.witness.y})")
        else:
            lines.append("witness: not found")
    return "\n".join(lines) + "\n"


def _csv_text(rows: list[list[str]]) -> str:
    lines = [",".join(CSV_COLUMNS)]
    lines.extend(",".join(row) for row in rows)
    return "\n".join(lines) + "\n"


def report_to_dict(report: ScanReport) -> dict:
    ng_records = [r for r in report.records if r.seq in set(report.ng_found)]
    return {
        "n": report.n,
        "max_an": report.max_an,
        "sequences": len(report.records),
        "cm_count": sum(1 for r in report.records if r.cm),
        "ng_found": [list(s.values) for s in report.ng_found],
        "ng_expected": [list(s.values) for s in report.ng_expected],
        "verdict": report.verdict,
        "ng_records": [record_to_dict(r) for r in ng_records],
    }


def report_to_text(report: ScanReport) -> str:
    lines = [f"scan n={report.n} max_an={report.max_an}"]
    lines.append(f"sequences: {len(report.records)}")
    lines.append(f"cohen_macaulay: {sum(1 for r in report.records if r.cm)}")
    lines.append(f"ng_non_gorenstein: {len(report.ng_found)}")
    for s in report.ng_found:
        lines.append(f"  {' '.join(map(str, s.values))}")
    lines.append(f"expected: {len(report.ng_expected)}")
    lines.append(f"verdict: {'ok' if report.verdict else 'MISMATCH'}")
    return "\n".join(lines) + "\n"


def report_to_csv(report: ScanReport) -> str:
    ng = set(report.ng_found)
    rows = [record_to_csv_row(r) for r in report.records if r.seq in ng]
    return _csv_text(rows)


def _emit(payload: str, out_path: Optional[str]) -> None:
    if out_path is None:
        sys.stdout.write(payload)
    else:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(payload)
        print(f"wrote {out_path}")


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def cmd_analyze(args) -> int:
    record = classify.analyze(Sequence(args.values))
    if args.format == "json":
        payload = _json_text(record_to_dict(record))
    elif args.format == "csv":
        payload = _csv_text([record_to_csv_row(record)])
    else:
        payload = record_to_text(record)
    _emit(payload, args.out)
    if args.verify:
        problems = verification.cross_check(Curve(record.seq))
        if problems:
            for p in problems:
                print(f"verify: {p}", file=sys.stderr)
            return EXIT_VERIFY_MISMATCH
        print("verify: ok", file=sys.stderr)
    return EXIT_OK


def cmd_scan(args) -> int:
    report = classify.scan(args.n, args.max, jobs=args.jobs)
    if args.format == "json":
        payload = _json_text(report_to_dict(report))
    elif args.format == "csv":
        payload = report_to_csv(report)
    else:
        payload = report_to_text(report)
    _emit(payload, args.out)
    return EXIT_OK if report.verdict else EXIT_VERDICT_FAIL


def cmd_movement(args) -> int:
    curve = Curve(Sequence(args.values))
    if not curve.is_cm() or not is_nearly_gorenstein(curve):
        print("no nearly Gorenstein movement exists", file=sys.stderr)
        return EXIT_NOT_NG
    chain = find_movement(curve)
    print(render_movement(chain, curve.seq))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ngcurves",
        description="Exact invariants of projective monomial curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="classify one sequence")
    p.add_argument("values", nargs="+", type=int, metavar="A")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--out", default=None, help="write the payload to a file")
    p.add_argument(
        "--verify",
        action="store_true",
        help="re-derive the result with brute-force oracles",
    )
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("scan", help="exhaustively classify all sequences")
    p.add_argument("--n", type=int, required=True, choices=(2, 3, 4))
    p.add_argument("--max", type=int, required=True, help="largest allowed a_n")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--out", default=None)
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("movement", help="print the covering-movement chain")
    p.add_argument("values", nargs="+", type=int, metavar="A")
    p.set_defaults(func=cmd_movement)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
