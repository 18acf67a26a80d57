"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from contextlib import contextmanager
from typing import Any, Sequence

from . import cache, motzkin, recurrences as rec, series
from . import enumeration as en
from .lattice import MarkVariant
from .report import build_report, growth_payload
from .tables import CountTable

log = logging.getLogger("klarner")

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

_VARIANTS = {v.value: v for v in MarkVariant}


class UsageError(Exception):
    pass


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("json", "csv", "text"), default="text")
    parser.add_argument("--out", metavar="PATH", help="write to PATH instead of stdout")
    parser.add_argument("--cache-dir", metavar="PATH", help=f"table cache (default ${cache.ENV_VAR} or {cache.DEFAULT_DIR})")
    parser.add_argument("--workers", type=int, default=1, metavar="N", help="processes for enumeration")
    parser.add_argument("--no-cache", action="store_true", help="neither read nor write cached tables")
    parser.add_argument("-v", "--verbose", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="klarner", description="Polyomino growth-constant bound toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("count", help="A(n): fixed polyominoes")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--algo", choices=("backtracking", "naive_oracle"), default="backtracking")
    _common(p)

    p = sub.add_parser("pairs", help="f(n) / g(n): marked pairs of a mark variant")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--variant", choices=tuple(_VARIANTS), default="A")
    _common(p)

    p = sub.add_parser("rec", help="F(n) / G(n) from the bounding recurrence")
    p.add_argument("--max-n", type=int, default=200)
    p.add_argument("--label", choices=("F", "G"), default="G")
    _common(p)

    p = sub.add_parser("series", help="coefficients of the generating function of G")
    p.add_argument("--order", type=int, default=200)
    _common(p)

    p = sub.add_parser("motzkin", help="bicolored Motzkin path counts")
    p.add_argument("--max-len", type=int, default=500)
    p.add_argument("--algo", choices=("dp", "bruteforce"), default="dp")
    _common(p)

    p = sub.add_parser("verify", help="run every check; exit 1 on any failure")
    p.add_argument("--max-n", type=int, default=12, help="enumeration size limit")
    p.add_argument("--order", type=int, default=200)
    p.add_argument("--max-len", type=int, default=500)
    p.add_argument("--ratio-n", type=int, default=2000)
    _common(p)

    p = sub.add_parser("report", help="growth-constant summary")
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--ratio-n", type=int, default=2000)
    _common(p)
    return parser


# ---------------------------------------------------------------- formatting


def _table_rows(values: dict[int, int]) -> list[tuple[int, int]]:
    return sorted(values.items())


def format_table(label: str, values: dict[int, Any], fmt: str) -> str:
    rows = _table_rows(values)
    if fmt == "json":
        return json.dumps({"label": label, "values": {str(n): v for n, v in rows}}, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "value"])
        w.writerows(rows)
        return buf.getvalue()
    return "".join(f"{label}({n}) = {v}\n" for n, v in rows)


def format_verification(payload: dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["name", "inputs", "actual", "relation", "expected", "tolerance", "pass"])
        for c in payload["checks"]:
            w.writerow(
                [
                    c["name"],
                    json.dumps(c["inputs"], sort_keys=True),
                    c["actual"],
                    c["relation"],
                    c["expected"],
                    c.get("tolerance", ""),
                    c["pass"],
                ]
            )
        return buf.getvalue()
    lines = []
    for c in payload["checks"]:
        tag = "PASS" if c["pass"] else "FAIL"
        inputs = " ".join(f"{k}={v}" for k, v in c["inputs"].items())
        tol = f" (tol {c['tolerance']})" if "tolerance" in c else ""
        lines.append(f"{tag} {c['name']} {inputs}: {c['actual']} {c['relation']} {c['expected']}{tol}")
    n_fail = sum(not c["pass"] for c in payload["checks"])
    lines.append(f"{'PASS' if payload['overall'] else 'FAIL'} overall: {len(payload['checks']) - n_fail} passed, {n_fail} failed")
    return "\n".join(lines) + "\n"


def format_mapping(payload: dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2) + "\n"
    flat = []
    for key, value in payload.items():
        if isinstance(value, dict):
            flat.extend((f"{key}.{k}", v) for k, v in value.items())
        else:
            flat.append((key, value))
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["key", "value"])
        w.writerows(flat)
        return buf.getvalue()
    return "".join(f"{k}: {v}\n" for k, v in flat)


@contextmanager
def _output(path: str | None):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


# ---------------------------------------------------------------- commands


def _cached(args, label: str, max_n: int) -> CountTable | None:
    if args.no_cache:
        return None
    return cache.load(label, max_n, args.cache_dir)


def _store(args, *tables: CountTable) -> None:
    if args.no_cache:
        return
    for t in tables:
        try:
            cache.store(t, args.cache_dir)
        except OSError as exc:
            log.warning("could not write cache: %s", exc)


def _need(value: int, lo: int, hi: int | None, flag: str) -> None:
    if value < lo or (hi is not None and value > hi):
        raise UsageError(f"{flag} must be in {lo}..{hi if hi is not None else 'inf'}, got {value}")


def cmd_count(args) -> tuple[str, int]:
    hi = en.MAX_BACKTRACKING_N if args.algo == "backtracking" else en.MAX_NAIVE_N
    _need(args.max_n, 1, hi, "--max-n")
    if args.algo == "naive_oracle":
        levels = en.naive_fixed_polyominoes(args.max_n)
        values = {n: len(levels[n]) for n in range(1, args.max_n + 1)}
    else:
        table = _cached(args, "A", args.max_n)
        if table is None:
            table = en.census(args.max_n, classify=False, workers=args.workers).table("A")
            _store(args, table)
        values = table.as_dict()
    return format_table("A", values, args.format), EXIT_OK


def cmd_pairs(args) -> tuple[str, int]:
    _need(args.max_n, 1, en.MAX_BACKTRACKING_N, "--max-n")
    variant = _VARIANTS[args.variant]
    label = "f" if variant is MarkVariant.TYPE_A else "g"
    table = _cached(args, label, args.max_n) if variant is not MarkVariant.TYPE_B_RIGHT else None
    if table is None:
        c = en.census(args.max_n, workers=args.workers)
        _store(args, c.table("A"), c.table("f"), c.table("g"))
        if variant is MarkVariant.TYPE_B_RIGHT:
            table = CountTable("g", (1, *c.type_b_right[1:]))
        else:
            table = c.table(label)
    return format_table(label, table.as_dict(), args.format), EXIT_OK


def cmd_rec(args) -> tuple[str, int]:
    _need(args.max_n, 1, None, "--max-n")
    table = _cached(args, args.label, args.max_n)
    if table is None:
        F, G = rec.compute_fg(args.max_n)
        _store(args, F, G)
        table = F if args.label == "F" else G
    return format_table(args.label, table.as_dict(), args.format), EXIT_OK


def cmd_series(args) -> tuple[str, int]:
    _need(args.order, 1, None, "--order")
    zeta = series.zeta_coefficients(args.order)
    coeffs = dict(enumerate(series.coefficients_as_ints(zeta.coeffs)))
    residual = series.functional_equation_residual(zeta)
    root, growth = series.discriminant_root()
    if args.format == "csv":
        return format_table("zeta", coeffs, "csv"), EXIT_OK
    payload = {
        "order": args.order,
        "coefficients": coeffs,
        "functional_equation_residual_is_zero": residual.is_zero(),
        "radius_of_convergence": root,
        "growth_constant": growth,
    }
    return format_mapping(payload, args.format), EXIT_OK if residual.is_zero() else EXIT_FAILED


def cmd_motzkin(args) -> tuple[str, int]:
    if args.algo == "bruteforce":
        _need(args.max_len, 0, motzkin.MAX_BRUTEFORCE_LEN, "--max-len")
        values = {L: motzkin.count_bicolored_paths(L, "bruteforce") for L in range(args.max_len + 1)}
    else:
        _need(args.max_len, 0, None, "--max-len")
        table = motzkin.path_table(args.max_len)
        values = {L: row[0] for L, row in enumerate(table)}
    return format_table("paths", values, args.format), EXIT_OK


def cmd_verify(args) -> tuple[str, int]:
    _need(args.max_n, 1, en.MAX_BACKTRACKING_N, "--max-n")
    _need(args.order, 6, None, "--order")
    _need(args.max_len, 0, None, "--max-len")
    _need(args.ratio_n, 2, None, "--ratio-n")
    # always recomputed: cached tables are never an input to verification
    report = build_report(
        args.max_n, workers=args.workers, order=args.order, ratio_n=args.ratio_n, max_len=args.max_len
    )
    payload = report.as_dict()
    return format_verification(payload, args.format), EXIT_OK if report.overall else EXIT_FAILED


def cmd_report(args) -> tuple[str, int]:
    _need(args.max_n, 1, en.MAX_BACKTRACKING_N, "--max-n")
    _need(args.ratio_n, 2, None, "--ratio-n")
    payload = growth_payload(args.max_n, args.ratio_n, workers=args.workers)
    ok = payload["lambda_lower"] <= payload["growth_constant"]
    return format_mapping(payload, args.format), EXIT_OK if ok else EXIT_FAILED


COMMANDS = {
    "count": cmd_count,
    "pairs": cmd_pairs,
    "rec": cmd_rec,
    "series": cmd_series,
    "motzkin": cmd_motzkin,
    "verify": cmd_verify,
    "report": cmd_report,
}


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    if args.workers < 1:
        parser.print_usage(sys.stderr)
        print("klarner: error: --workers must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        text, code = COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"klarner: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    with _output(args.out) as fh:
        fh.write(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
