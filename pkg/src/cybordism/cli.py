"""Command-line front end.

Every subcommand prints one deterministic report envelope (JSON with
sorted keys) so reruns are byte-identical; table-shaped subcommands also
offer ``--format csv`` with the same numeric content.  All numbers are
exact integers.  Exit code 0 means the envelope status is ``pass``;
domain or verification failures exit 1, usage errors exit 2.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from . import cohomology, generators, numthy, partitions, toricdata
from .partitions import Partition, parse_partition

TABLE_COMMANDS = {"gn", "alpha", "gcd", "power-check", "chern"}
STREAM_COMMANDS = {"ks-parse", "ks-filter"}


@dataclass
class CommandOutput:
    results: dict
    status: str  # "pass" | "fail" | "partial"
    table: tuple[list[str], list[list]] | None = None
    stream: list[dict] | None = None  # jsonl payload for ks subcommands


def _pmap(fn: Callable, items: Iterable, jobs: int) -> list:
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def _cmd_gn(args: argparse.Namespace) -> CommandOutput:
    if args.max < 3:
        raise ValueError(f"need --max >= 3, got {args.max}")
    rows = []
    for n in range(3, args.max + 1):
        rows.append(
            {
                "n": n,
                "m1": numthy.milnor_factor(n - 1),
                "m2": numthy.milnor_factor(n - 2),
                "g": numthy.su_generator_s_number(n),
            }
        )
    columns = ["n", "m1", "m2", "g"]
    table = (columns, [[row[c] for c in columns] for row in rows])
    return CommandOutput(results={"rows": rows}, status="pass", table=table)


def _cmd_alpha(args: argparse.Namespace) -> CommandOutput:
    rows = []
    all_match = True
    for sigma in partitions.generator_partitions(args.n):
        magnitude = partitions.weighted_multinomial(sigma)
        s_value = cohomology.hypersurface_s_number(sigma)
        match = s_value == -magnitude
        all_match = all_match and match
        rows.append(
            {
                "partition": sigma.label,
                "multinomial": partitions.multinomial(sigma),
                "alpha": magnitude,
                "s_number": s_value,
                "match": match,
            }
        )
    columns = ["partition", "multinomial", "alpha", "s_number", "match"]
    table = (columns, [[row[c] for c in columns] for row in rows])
    return CommandOutput(
        results={"n": args.n, "rows": rows},
        status="pass" if all_match else "fail",
        table=table,
    )


def _gcd_row(n: int) -> dict:
    tag = numthy.classify(n) if n > 3 else None
    return {
        "n": n,
        "gcd": generators.s_number_gcd(n),
        "expected": numthy.su_generator_s_number(n),
        "case": tag.label if tag else "base",
    }


def _cmd_gcd(args: argparse.Namespace) -> CommandOutput:
    if args.max < 3:
        raise ValueError(f"need --max >= 3, got {args.max}")
    rows = _pmap(_gcd_row, range(3, args.max + 1), args.jobs)
    case_counts: dict[str, int] = {}
    all_ok = True
    for row in rows:
        row["ok"] = row["gcd"] == row["expected"]
        all_ok = all_ok and row["ok"]
        case_counts[row["case"]] = case_counts.get(row["case"], 0) + 1
    columns = ["n", "gcd", "expected", "case", "ok"]
    table = (columns, [[row[c] for c in columns] for row in rows])
    return CommandOutput(
        results={"rows": rows, "case_counts": case_counts},
        status="pass" if all_ok else "fail",
        table=table,
    )


def _cmd_certificate(args: argparse.Namespace) -> CommandOutput:
    cert = generators.certificate(args.n)
    reverified = generators.reverify_certificate(cert)
    ok = reverified == cert.achieved == numthy.su_generator_s_number(args.n)
    results = {
        "n": cert.n,
        "entries": [
            {"partition": sigma.label, "coefficient": coeff}
            for sigma, coeff in cert.entries
        ],
        "achieved": cert.achieved,
        "reverified_s_number": reverified,
        "integral_combination": True,
        "ok": ok,
    }
    return CommandOutput(results=results, status="pass" if ok else "fail")


def _cmd_s_number(args: argparse.Namespace) -> CommandOutput:
    sigma = parse_partition(args.partition)
    value = cohomology.hypersurface_s_number(sigma)
    return CommandOutput(
        results={"partition": sigma.label, "s_number": value}, status="pass"
    )


def _chern_index_label(omega: Partition) -> str:
    bits = []
    for index in sorted(set(omega)):
        power = list(omega).count(index)
        bits.append(f"c{index}" if power == 1 else f"c{index}^{power}")
    return "*".join(bits)


def _cmd_chern(args: argparse.Namespace) -> CommandOutput:
    sigma = parse_partition(args.partition)
    numbers = cohomology.hypersurface_chern_numbers(sigma)
    dimension = sigma.n - 1
    rows = [
        {"index": _chern_index_label(omega), "value": numbers[omega]}
        for omega in cohomology.iter_chern_indices(dimension)
    ]
    euler = numbers[Partition((dimension,))]
    columns = ["index", "value"]
    table = (columns, [[row[c] for c in columns] for row in rows])
    return CommandOutput(
        results={
            "partition": sigma.label,
            "dimension": dimension,
            "rows": rows,
            "euler_characteristic": euler,
        },
        status="pass",
        table=table,
    )


def _power_report_rows(n: int) -> list[dict]:
    report = partitions.power_check(n)
    return [
        {
            "n": n,
            "prime": entry.prime,
            "kind": entry.kind,
            "witness": entry.witness.label,
            "witness_valuation": entry.witness_valuation,
            "scan_min": entry.scan_min,
            "ok": entry.ok,
        }
        for entry in report.entries
    ]


def _cmd_power_check(args: argparse.Namespace) -> CommandOutput:
    if args.max < 3:
        raise ValueError(f"need --max >= 3, got {args.max}")
    per_n = _pmap(_power_report_rows, range(3, args.max + 1), args.jobs)
    rows = [row for chunk in per_n for row in chunk]
    all_ok = all(row["ok"] for row in rows)
    columns = ["n", "prime", "kind", "witness", "witness_valuation", "scan_min", "ok"]
    table = (columns, [[row[c] for c in columns] for row in rows])
    return CommandOutput(
        results={"rows": rows},
        status="pass" if all_ok else "fail",
        table=table,
    )


def _cmd_polytope(args: argparse.Namespace) -> CommandOutput:
    sigma = parse_partition(args.partition)
    poly = toricdata.partition_polytope(sigma)
    report = toricdata.verify_reflexive(poly)
    results = {
        "partition": sigma.label,
        "dim": poly.dim,
        "vertex_count": report.vertex_count,
        "facet_count": report.facet_count,
        "vertices": [list(v) for v in poly.vertices],
        "facets": [list(a) for a in poly.facets],
        "reflexive": report.ok,
        "diagnostics": list(report.diagnostics),
    }
    return CommandOutput(results=results, status="pass" if report.ok else "fail")


def _read_ks(args: argparse.Namespace) -> tuple[list[toricdata.KSRecord], list[dict]]:
    if args.input == "-":
        lines = sys.stdin.readlines()
    else:
        with open(args.input, "r", encoding="utf-8") as handle:
            lines = handle.readlines()
    records = []
    errors = []
    for item in toricdata.parse_ks(lines, strict=args.strict):
        if isinstance(item, toricdata.KSParseError):
            errors.append({"line": item.line, "message": item.message})
        else:
            records.append(item)
    return records, errors


def _record_dict(record: toricdata.KSRecord) -> dict:
    payload = record.as_dict()
    payload["line"] = record.line
    return payload


def _ks_status(n_good: int, n_bad: int) -> str:
    if n_bad == 0:
        return "pass"
    return "partial" if n_good else "fail"


def _cmd_ks_parse(args: argparse.Namespace) -> CommandOutput:
    records, errors = _read_ks(args)
    payload = [_record_dict(r) for r in records]
    results = {
        "records": payload,
        "errors": errors,
        "counts": {
            "records": len(records),
            "errors": len(errors),
            "inconsistent": sum(1 for r in records if not r.consistent),
        },
    }
    bad = len(errors) + results["counts"]["inconsistent"]
    return CommandOutput(
        results=results,
        status=_ks_status(len(records) - results["counts"]["inconsistent"], bad),
        stream=payload + [{"error": True, **err} for err in errors],
    )


def _cmd_ks_filter(args: argparse.Namespace) -> CommandOutput:
    records, errors = _read_ks(args)
    usable = [r for r in records if r.consistent]
    kept = list(toricdata.filter_hodge_difference(usable, args.target))
    payload = [_record_dict(r) for r in kept]
    bad = len(errors) + len(records) - len(usable)
    results = {
        "target": args.target,
        "records": payload,
        "counts": {
            "parsed": len(records),
            "errors": len(errors),
            "inconsistent": len(records) - len(usable),
            "kept": len(kept),
        },
    }
    return CommandOutput(
        results=results,
        status=_ks_status(len(usable), bad),
        stream=payload,
    )


def _side_dict(side: toricdata.RangeSide) -> dict:
    return {
        "target": side.target,
        "bounds": list(side.bounds),
        "h11_values": list(side.h11_values),
        "h11_min": side.h11_min,
        "h11_max": side.h11_max,
        "out_of_range": [{"line": line, "h11": h11} for line, h11 in side.out_of_range],
    }


def _cmd_ks_ranges(args: argparse.Namespace) -> CommandOutput:
    records, errors = _read_ks(args)
    usable = [r for r in records if r.consistent]
    report = toricdata.h11_range_report(usable)
    results = {
        "plus": _side_dict(report.plus),
        "minus": _side_dict(report.minus),
        "counts": {
            "parsed": len(records),
            "errors": len(errors),
            "inconsistent": len(records) - len(usable),
        },
    }
    ok = report.clean and not errors and len(usable) == len(records)
    return CommandOutput(results=results, status="pass" if ok else "fail")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cybordism",
        description=(
            "Exact s-numbers and Chern numbers of Calabi-Yau hypersurfaces in "
            "products of projective spaces, gcd verification and integer "
            "certificates for SU-bordism generators, reflexive-polytope "
            "construction, and Hodge-number record filtering."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument(
            "--format",
            choices=["json", "csv", "jsonl"],
            default="json",
            help="output format (csv for table subcommands, jsonl for ks)",
        )
        return p

    p = add("gn", "table of milnor factors and generator s-numbers")
    p.add_argument("--max", type=int, required=True, help="largest n (inclusive)")

    p = add("alpha", "s-number magnitudes over the capped partitions of n, both routes")
    p.add_argument("--n", type=int, required=True)

    p = add("gcd", "verify the gcd identity with prime-power case attribution")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1, help="parallel workers")

    p = add("certificate", "integer generator certificate with independent recheck")
    p.add_argument("--n", type=int, required=True)

    p = add("s-number", "s-number of one hypersurface via the cohomology route")
    p.add_argument("--partition", required=True, help="comma-separated parts, e.g. 1,1,3")

    p = add("chern", "all Chern numbers of one hypersurface")
    p.add_argument("--partition", required=True)

    p = add("power-check", "multinomial divisibility pattern for 3 <= n <= max")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)

    p = add("polytope", "product-of-simplices polytope data and reflexivity verdict")
    p.add_argument("--partition", required=True)

    ks = sub.add_parser("ks", help="Hodge-number record pipeline")
    ks_sub = ks.add_subparsers(dest="ks_command", required=True)
    for name, help_text in (
        ("parse", "parse records, reporting positioned errors"),
        ("filter", "keep records with the requested Hodge difference"),
        ("ranges", "summarise achieved h11 values for both signs"),
    ):
        p = ks_sub.add_parser(name, help=help_text)
        p.add_argument("--input", required=True, help="input file, or - for stdin")
        p.add_argument("--strict", action="store_true", help="treat chi mismatches as errors")
        p.add_argument(
            "--format", choices=["json", "csv", "jsonl"], default="json"
        )
        if name == "filter":
            p.add_argument("--target", type=int, required=True, choices=[1, -1])
    return parser


_HANDLERS: dict[str, Callable[[argparse.Namespace], CommandOutput]] = {
    "gn": _cmd_gn,
    "alpha": _cmd_alpha,
    "gcd": _cmd_gcd,
    "certificate": _cmd_certificate,
    "s-number": _cmd_s_number,
    "chern": _cmd_chern,
    "power-check": _cmd_power_check,
    "polytope": _cmd_polytope,
    "ks-parse": _cmd_ks_parse,
    "ks-filter": _cmd_ks_filter,
    "ks-ranges": _cmd_ks_ranges,
}


def _render_csv(table: tuple[list[str], list[list]]) -> str:
    columns, rows = table
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    writer.writerows(rows)
    return buffer.getvalue()


def _parameters(args: argparse.Namespace) -> dict:
    skip = {"command", "ks_command", "format"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def run(argv: Sequence[str]) -> int:
    """Execute one subcommand; prints the report and returns the exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    command = args.command
    if command == "ks":
        command = f"ks-{args.ks_command}"
    if args.format == "csv" and command not in TABLE_COMMANDS:
        parser.error(f"--format csv is only available for {sorted(TABLE_COMMANDS)}")
    if args.format == "jsonl" and command not in STREAM_COMMANDS:
        parser.error("--format jsonl is only available for ks parse and ks filter")

    try:
        output = _HANDLERS[command](args)
    except (ValueError, OSError) as exc:
        envelope = {
            "command": command,
            "parameters": _parameters(args),
            "results": {"error": str(exc)},
            "status": "fail",
        }
        print(json.dumps(envelope, indent=2, sort_keys=True))
        return 1

    if args.format == "csv":
        sys.stdout.write(_render_csv(output.table))
    elif args.format == "jsonl":
        for item in output.stream or []:
            print(json.dumps(item, sort_keys=True))
    else:
        envelope = {
            "command": command,
            "parameters": _parameters(args),
            "results": output.results,
            "status": output.status,
        }
        print(json.dumps(envelope, indent=2, sort_keys=True))
    return 0 if output.status == "pass" else 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
