"""``mhn``: tables of Hurwitz numbers, exact identity checks, recursion output.

Exit codes: 0 computed or verified, 1 counterexample found, 2 usage or
budget error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .hurwitz import (ORACLE_MAX_B, ORACLE_MAX_DEGREE, BudgetError, HurwitzIndex, connected_hurwitz,
                      disconnected_hurwitz, oracle_connected, oracle_disconnected)
from .identities import (VerificationReport, frac_json, verify_content_lemma, verify_cut_and_join,
                         verify_han_identity, verify_w3_reduction)
from .partitions import format_partition, partitions_of

MAX_DEGREE = 8
MAX_B = 8
MAX_DIAGRAM = 20
MAX_A = 6
TR_MAX_EULER = 4
DEFAULT_LOOP_EULER = 3

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- parallel map in canonical order ------------------------------------------

def _pmap(fn: Callable, items: Sequence, workers: int) -> List:
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=min(workers, len(items))) as pool:
        return list(pool.map(fn, items))


# -- output ---------------------------------------------------------------------

def _csv_cell(v: Any) -> str:
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if v is None:
        return ""
    if isinstance(v, (list, tuple)):
        return ",".join(str(x) for x in v)
    return str(v)


def _json_value(v: Any) -> Any:
    if isinstance(v, Fraction):
        return frac_json(v)
    if isinstance(v, dict):
        return {k: _json_value(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_json_value(x) for x in v]
    return v


def _render_table(rows: List[Dict[str, Any]], columns: List[str], fmt: str,
                  header: Optional[Dict[str, Any]] = None) -> str:
    if fmt == "json":
        doc = dict(header or {})
        doc["rows"] = [_json_value(r) for r in rows]
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        for r in rows:
            w.writerow([_csv_cell(r.get(c)) for c in columns])
        return buf.getvalue()
    cells = [[c for c in columns]] + [[_text_cell(r.get(c)) for c in columns] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(columns))]
    lines = ["  ".join(x.rjust(wd) for x, wd in zip(row, widths)).rstrip() for row in cells]
    if header and "status" in header:
        lines.append(f"status: {header['status']}")
    return "\n".join(lines) + "\n"


def _text_cell(v: Any) -> str:
    if v is None:
        return "-"
    if isinstance(v, (list, tuple)):
        return ",".join(str(x) for x in v)
    return str(v)


def _render_report(report: VerificationReport, fmt: str) -> str:
    doc = report.to_json()
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["field", "value"])
        for key in ("identity", "status", "checked"):
            w.writerow([key, doc[key]])
        for key, v in doc["range"].items():
            w.writerow([f"range.{key}", json.dumps(v) if not isinstance(v, int) else v])
        if "witness" in doc:
            w.writerow(["witness", json.dumps(doc["witness"], sort_keys=True)])
        for note in doc.get("notes", []):
            w.writerow(["note", note])
        return buf.getvalue()
    rng = " ".join(f"{k}={v}" for k, v in doc["range"].items())
    lines = [f"{doc['identity']}: {doc['status']} ({doc['checked']} checked; {rng})"]
    if "witness" in doc:
        lines.append("witness: " + json.dumps(doc["witness"], sort_keys=True))
    lines.extend(f"note: {n}" for n in doc.get("notes", []))
    return "\n".join(lines) + "\n"


def _emit(text: str, path: Optional[str]) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


# -- hurwitz ------------------------------------------------------------------

def _hurwitz_rows(job: Tuple[Tuple[int, ...], int, bool]) -> List[Dict[str, Any]]:
    mu, b_max, with_oracle = job
    d, length = sum(mu), len(mu)
    rows = []
    for b in range((d + length) % 2, b_max + 1, 2):
        idx = HurwitzIndex.from_b(mu, b)
        row: Dict[str, Any] = {
            "g": idx.g, "mu": format_partition(mu), "b": b,
            "disconnected": disconnected_hurwitz(idx),
            "connected": connected_hurwitz(idx),
        }
        if with_oracle and d <= ORACLE_MAX_DEGREE and b <= ORACLE_MAX_B:
            row["oracle_disconnected"] = oracle_disconnected(mu, b)
            row["oracle_connected"] = oracle_connected(mu, b)
        rows.append(row)
    return rows


def cmd_hurwitz(args) -> int:
    _check_range("--dmax", args.dmax, 0, MAX_DEGREE)
    _check_range("--bmax", args.bmax, 0, MAX_B)
    jobs = [(mu, args.bmax, args.with_oracle)
            for d in range(1, args.dmax + 1) for mu in partitions_of(d)]
    rows = [r for chunk in _pmap(_hurwitz_rows, jobs, args.workers) for r in chunk]
    columns = ["g", "mu", "b", "disconnected", "connected"]
    if args.with_oracle:
        columns += ["oracle_disconnected", "oracle_connected"]
    header = {"command": "hurwitz", "caps": {"d_max": args.dmax, "b_max": args.bmax}}
    _emit(_render_table(rows, columns, args.format, header), args.output)
    return EXIT_OK


# -- verify ---------------------------------------------------------------------

_SIZE_SWEEPS = {
    "lemma": verify_content_lemma,
    "han": verify_han_identity,
    "w3": verify_w3_reduction,
}


def _size_job(job: Tuple[str, int]) -> VerificationReport:
    name, n = job
    return _SIZE_SWEEPS[name](n, n_min=n)


def _merge_sizes(name: str, n_max: int, parts: Iterable[VerificationReport]) -> VerificationReport:
    merged = _SIZE_SWEEPS[name](0)
    merged.range = {"n_max": n_max}
    merged.notes = [] if n_max >= 1 else ["empty range"]
    columns = 0
    for part in parts:
        merged.checked += part.checked
        for note in part.notes:
            if note.endswith("column diagrams checked directly"):
                columns += int(note.split()[0])
        if not part.ok:
            merged.fail(part.witness)
            break
    if columns:
        merged.notes.append(f"{columns} column diagrams checked directly")
    return merged


def _loop_levels(max_euler: int) -> List[Tuple[int, int]]:
    # level (g, n) produces omega_{g, n+1}
    return [(g, n) for g in range(max_euler) for n in range(max_euler + 2)
            if 0 <= 2 * g - 1 + n <= max_euler]


def _loop_job(job: Tuple[int, int, Optional[int]]) -> VerificationReport:
    from .specrec.loop import check_quadratic_loop
    g, n, order = job
    return check_quadratic_loop(g, n, order)


def _verify_loop(args) -> VerificationReport:
    if args.g is None and args.n is None:
        levels = sorted(_loop_levels(DEFAULT_LOOP_EULER), key=lambda gn: (2 * gn[0] + gn[1], gn))
    elif args.g is None or args.n is None:
        raise UsageError("give both --g and --n, or neither")
    else:
        if args.g < 0 or args.n < 0 or 2 * args.g - 1 + args.n > TR_MAX_EULER:
            raise UsageError(f"level (g, n) = ({args.g}, {args.n}) needs g, n >= 0 and "
                             f"2g - 2 + (n + 1) <= {TR_MAX_EULER}")
        levels = [(args.g, args.n)]
    parts = _pmap(_loop_job, [(g, n, args.order) for g, n in levels], args.workers)
    report = VerificationReport("quadratic-loop", {"levels": [list(gn) for gn in levels]})
    for gn, part in zip(levels, parts):
        report.checked += part.checked
        if not part.ok:
            return report.fail({"level": list(gn), **part.witness})
    return report


def cmd_verify(args) -> int:
    which = args.identity
    if which == "cut-and-join":
        _check_range("--dmax", args.dmax, 0, MAX_DEGREE)
        _check_range("--bmax", args.bmax, 0, MAX_B)
        report = verify_cut_and_join(args.dmax, args.bmax)
    elif which in _SIZE_SWEEPS:
        _check_range("--nmax", args.nmax, 0, MAX_DIAGRAM)
        parts = _pmap(_size_job, [(which, n) for n in range(1, args.nmax + 1)], args.workers)
        report = _merge_sizes(which, args.nmax, parts)
    else:
        report = _verify_loop(args)
    _emit(_render_report(report, args.format), args.output)
    return EXIT_OK if report.ok else EXIT_COUNTEREXAMPLE


# -- tr ---------------------------------------------------------------------------

def _check_tr(g: int, n: int, allow_unstable: bool) -> None:
    if g < 0 or n < 1:
        raise UsageError(f"need g >= 0 and n >= 1, got ({g}, {n})")
    euler = 2 * g - 2 + n
    if euler <= 0 and not allow_unstable:
        raise UsageError(f"(g, n) = ({g}, {n}) is an unstable case with no pole-basis form; "
                         f"use `mhn tr compare` for its x-expansion")
    if euler > TR_MAX_EULER:
        raise UsageError(f"supported range is 2g - 2 + n <= {TR_MAX_EULER}, got {euler}")


def cmd_tr_omega(args) -> int:
    from .specrec.recursion import compute_omega
    _check_tr(args.g, args.n, allow_unstable=False)
    _check_range("--order-shift", args.order_shift, 0, 16)
    form = compute_omega(args.g, args.n, order_shift=args.order_shift)
    if args.format == "json":
        text = json.dumps(form.to_json(), indent=2) + "\n"
    else:
        rows = [{"k": list(k), "coefficient": c} for k, c in form.sorted_items()]
        text = _render_table(rows, ["k", "coefficient"], args.format)
    _emit(text, args.output)
    return EXIT_OK


def _bridge_row(job) -> Fraction:
    from .specrec.expansion import hurwitz_side
    g, a = job
    return hurwitz_side(g, a)


def cmd_tr_compare(args) -> int:
    import itertools
    from .specrec.expansion import expand_omega_at_zero
    from .specrec.recursion import compute_omega
    _check_tr(args.g, args.n, allow_unstable=True)
    _check_range("--amax", args.amax, 1, MAX_A)
    if args.n * args.amax > MAX_DIAGRAM:
        raise BudgetError(f"n * a_max = {args.n * args.amax} exceeds the degree budget {MAX_DIAGRAM}")
    stable = 2 * args.g - 2 + args.n > 0
    form = compute_omega(args.g, args.n) if stable else (args.g, args.n)
    W = expand_omega_at_zero(form, args.amax)
    keys = sorted(itertools.product(range(1, args.amax + 1), repeat=args.n))
    rhs = _pmap(_bridge_row, [(args.g, a) for a in keys], args.workers)
    rows = [{"a": list(a), "W": W[a], "hurwitz": h, "match": W[a] == h} for a, h in zip(keys, rhs)]
    ok = all(r["match"] for r in rows)
    header = {"identity": "tr-bridge", "range": {"g": args.g, "n": args.n, "a_max": args.amax},
              "status": "verified" if ok else "counterexample", "checked": len(rows)}
    _emit(_render_table(rows, ["a", "W", "hurwitz", "match"], args.format, header), args.output)
    return EXIT_OK if ok else EXIT_COUNTEREXAMPLE


# -- parser -----------------------------------------------------------------------

def _check_range(flag: str, value: int, lo: int, hi: int) -> None:
    if not lo <= value <= hi:
        raise BudgetError(f"{flag} must lie in [{lo}, {hi}], got {value}")


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--output", "-o", default=None, help="file to write (default: stdout)")
    p.add_argument("--workers", type=int, default=os.cpu_count() or 1,
                   help="worker processes; output does not depend on it")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mhn", description="Exact monotone Hurwitz computations.")
    sub = parser.add_subparsers(dest="command", required=True)

    h = sub.add_parser("hurwitz", help="table of disconnected and connected numbers")
    h.add_argument("--dmax", type=int, default=4)
    h.add_argument("--bmax", type=int, default=4)
    h.add_argument("--with-oracle", action="store_true",
                   help=f"add brute-force columns where d <= {ORACLE_MAX_DEGREE}, b <= {ORACLE_MAX_B}")
    _common(h)
    h.set_defaults(func=cmd_hurwitz)

    v = sub.add_parser("verify", help="exact identity checks")
    vs = v.add_subparsers(dest="identity", required=True)
    cj = vs.add_parser("cut-and-join")
    cj.add_argument("--dmax", type=int, default=6)
    cj.add_argument("--bmax", type=int, default=6)
    _common(cj)
    for name, default in (("lemma", 15), ("han", 10), ("w3", 10)):
        q = vs.add_parser(name)
        q.add_argument("--nmax", type=int, default=default)
        _common(q)
    lp = vs.add_parser("loop", help="quadratic loop equation at the branch point")
    lp.add_argument("--g", type=int, default=None)
    lp.add_argument("--n", type=int, default=None)
    lp.add_argument("--order", type=int, default=None, help="Laurent order (default: working order)")
    _common(lp)
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("tr", help="topological recursion")
    ts = t.add_subparsers(dest="mode", required=True)
    om = ts.add_parser("omega", help="pole-basis form of omega_{g,n}")
    om.add_argument("--g", type=int, required=True)
    om.add_argument("--n", type=int, required=True)
    om.add_argument("--order-shift", type=int, default=0)
    _common(om)
    om.set_defaults(func=cmd_tr_omega)
    cp = ts.add_parser("compare", help="x-expansion against connected Hurwitz numbers")
    cp.add_argument("--g", type=int, required=True)
    cp.add_argument("--n", type=int, required=True)
    cp.add_argument("--amax", type=int, default=4)
    _common(cp)
    cp.set_defaults(func=cmd_tr_compare)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.workers < 1:
        parser.error("--workers must be at least 1")
    try:
        return args.func(args)
    except (UsageError, BudgetError) as exc:
        print(f"mhn: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
