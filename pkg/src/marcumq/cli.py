"""Command-line harness: evaluation, tables, property scans, figure data.

Single binary with four subcommands; all state comes in through flags.

Exit codes: 0 on success (and scan pass), 1 when a property scan fails,
2 on usage or domain errors.  Output is csv by default (LF endings,
header row) or json with --format json, and is byte-identical for
identical flags.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from .analysis import (
    CurveTable,
    ErrorRow,
    ScanReport,
    error_table,
    figure_data,
    scan_envelope_ordering,
    scan_f_ratio_monotone,
    scan_g_negative,
    scan_jp_dominance,
    scan_sandwich,
    scan_shifted_exp_chain,
    log_grid,
)
from .bounds import BoundId, Regime, eval_all, regime_of
from .errors import (
    DomainError,
    OverflowDomainError,
    RegimeError,
    SingularityError,
    UnknownFigureError,
)
from .oracle import QArgs, q1_reference

_PRESETS = {
    "V": (0.1, 0.1, 1.0, 0.1, (BoundId.UB1JP, BoundId.UB1A)),
    "VI": (0.1, 0.1, 1.0, 0.1, (BoundId.LB1JP, BoundId.LB1A)),
    "VII": (2.0, 1.0, 2.0, 0.1, (BoundId.UB2JP, BoundId.UB2A)),
    "VIII": (20.0, 19.1, 20.0, 0.1, (BoundId.LB2JP, BoundId.LB2A)),
}

SCAN_PROPERTIES = (
    "g_negative",
    "f_dec_eq2",
    "f_inc_sinh",
    "chain_eq6",
    "envelope",
    "sandwich",
    "jp_dominance",
)


def _fmt(v: float) -> str:
    if isinstance(v, float) and math.isnan(v):
        return "nan"
    return repr(float(v))


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        print(out)
    else:
        sys.stdout.write(text)


def _b_grid(start: float, end: float, step: float) -> list[float]:
    if step <= 0:
        raise DomainError(f"--b-step must be positive, got {step!r}")
    if end < start:
        raise DomainError(f"--b-end {end!r} below --b-start {start!r}")
    count = int(math.floor((end - start) / step + 1e-9)) + 1
    # snap accumulated floating drift (0.1 + 2*0.1 -> 0.30000000000000004)
    return [round(start + i * step, 10) for i in range(count)]


def _parse_ids(spec: str) -> list[BoundId]:
    ids = []
    for tok in spec.split(","):
        tok = tok.strip()
        if not tok:
            continue
        try:
            ids.append(BoundId(tok.upper()))
        except ValueError:
            valid = ",".join(i.value for i in BoundId)
            raise DomainError(f"unknown bound id {tok!r}; valid ids: {valid}") from None
    if not ids:
        raise DomainError("--ids must name at least one bound")
    return ids


def _rows_to_csv(rows: list[ErrorRow], ids: list[BoundId], echo_rounded: bool) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    header = ["b", "exact"]
    for bid in ids:
        header += [f"{bid.value}_raw", f"{bid.value}_clamped", f"{bid.value}_eps_pct"]
    if echo_rounded:
        header += ["exact_5dp"]
        for bid in ids:
            header += [f"{bid.value}_5dp", f"{bid.value}_eps_pct_4dp"]
    header.append("notes")
    w.writerow(header)
    for row in rows:
        rec = [_fmt(row.b), _fmt(row.exact)]
        for bid in ids:
            cell = row.cells.get(bid)
            if cell is None:
                rec += ["", "", ""]
            else:
                rec += [_fmt(cell.raw), _fmt(cell.clamped), _fmt(cell.epsilon_pct)]
        if echo_rounded:
            rec.append(f"{row.exact:.5f}")
            for bid in ids:
                cell = row.cells.get(bid)
                rec += ["", ""] if cell is None else [f"{cell.raw:.5f}", f"{cell.epsilon_pct:.4f}"]
        rec.append("; ".join(f"{k.value}: {v}" for k, v in row.skipped.items()))
        w.writerow(rec)
    return buf.getvalue()


def _rows_to_json(rows: list[ErrorRow], ids: list[BoundId]) -> str:
    payload = []
    for row in rows:
        obj: dict = {"b": row.b, "exact": row.exact}
        for bid in ids:
            cell = row.cells.get(bid)
            if cell is None:
                obj[bid.value] = None
            else:
                obj[bid.value] = {
                    "raw": cell.raw,
                    "clamped": cell.clamped,
                    "eps_pct": cell.epsilon_pct,
                }
        if row.skipped:
            obj["skipped"] = {k.value: v for k, v in row.skipped.items()}
        payload.append(obj)
    return json.dumps(payload, indent=2) + "\n"


def cmd_eval(ns: argparse.Namespace) -> int:
    args = QArgs(ns.a, ns.b)
    res = q1_reference(args)
    evals, skipped = eval_all(args)
    regime = regime_of(args).value
    if ns.format == "json":
        payload = {
            "a": args.a,
            "b": args.b,
            "regime": regime,
            "exact": res.value,
            "agreement_gap": res.agreement_gap,
            "bounds": [
                {
                    "id": ev.id.value,
                    "side": ev.side,
                    "raw": ev.raw,
                    "clamped": ev.clamped,
                    "eps_pct": 100.0 * abs(ev.raw - res.value) / res.value if res.value > 0 else math.inf,
                }
                for ev in evals
            ],
            "skipped": {k.value: v for k, v in skipped.items()},
        }
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
        return 0
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["a", "b", "regime", "exact", "agreement_gap"])
    w.writerow([_fmt(args.a), _fmt(args.b), regime, _fmt(res.value), _fmt(res.agreement_gap)])
    w.writerow([])
    w.writerow(["id", "side", "raw", "clamped", "eps_pct"])
    for ev in evals:
        eps = 100.0 * abs(ev.raw - res.value) / res.value if res.value > 0 else math.inf
        w.writerow([ev.id.value, ev.side, _fmt(ev.raw), _fmt(ev.clamped), _fmt(eps)])
    for bid, reason in skipped.items():
        w.writerow([bid.value, "skipped", "", "", reason])
    sys.stdout.write(buf.getvalue())
    return 0


def cmd_table(ns: argparse.Namespace) -> int:
    if ns.preset:
        a, start, end, step, ids = _PRESETS[ns.preset]
        ids = list(ids)
        echo = True
    else:
        missing = [f for f in ("a", "b_start", "b_end", "b_step", "ids") if getattr(ns, f) is None]
        if missing:
            raise DomainError(
                "custom table needs --a, --b-start, --b-end, --b-step and --ids "
                f"(missing: {', '.join(m.replace('_', '-') for m in missing)})"
            )
        a, start, end, step = ns.a, ns.b_start, ns.b_end, ns.b_step
        ids = _parse_ids(ns.ids)
        echo = False
    bs = _b_grid(start, end, step)
    for bid in ids:
        if bid.regime is Regime.BGeqA:
            compatible = any(b >= a for b in bs)
        else:
            compatible = any(b <= a for b in bs)
        if not compatible:
            raise DomainError(
                f"{bid.value} applies to the "
                f"{'b >= a' if bid.regime is Regime.BGeqA else 'b < a'} regime; "
                f"no grid point qualifies for a={a:g}"
            )
    rows = error_table(a, bs, ids)
    if ns.format == "json":
        _emit(_rows_to_json(rows, ids), ns.out)
    else:
        _emit(_rows_to_csv(rows, ids, echo), ns.out)
    return 0


def _report_text(rep: ScanReport) -> str:
    lines = [
        f"property: {rep.property_id}",
        f"grid: {rep.grid}",
        f"worst_violation: {_fmt(rep.worst_violation)}",
        f"witness: {rep.witness!r}",
        f"passed: {rep.passed}",
    ]
    for k, v in rep.details.items():
        if isinstance(v, (int, float, str)):
            lines.append(f"{k}: {v}")
    return "\n".join(lines) + "\n"


def _report_json(rep: ScanReport) -> str:
    scalars = {k: v for k, v in rep.details.items() if isinstance(v, (int, float, str))}
    payload = {
        "property": rep.property_id,
        "grid": rep.grid,
        "worst_violation": rep.worst_violation,
        "witness": list(rep.witness),
        "passed": rep.passed,
        "details": scalars,
    }
    return json.dumps(payload, indent=2) + "\n"


def cmd_scan(ns: argparse.Namespace) -> int:
    prop = ns.property
    if prop == "g_negative":
        lo = 1e-3 if ns.lo is None else ns.lo
        hi = 700.0 if ns.hi is None else ns.hi
        rep = scan_g_negative(lo, hi, ns.n or 10000)
    elif prop in ("f_dec_eq2", "f_inc_sinh"):
        lo = 1e-3 if ns.lo is None else ns.lo
        hi = 700.0 if ns.hi is None else ns.hi
        rep = scan_f_ratio_monotone(prop, lo, hi, ns.n or 10000)
    elif prop == "chain_eq6":
        b = 1.0 if ns.b is None else ns.b
        m = 3.0 if ns.m is None else ns.m
        lo = b + 0.5 if ns.lo is None else ns.lo
        hi = b + 50.0 if ns.hi is None else ns.hi
        rep = scan_shifted_exp_chain(b, m, log_grid(lo, hi, ns.n or 100))
    elif prop == "envelope":
        a = 10.0 if ns.a is None else ns.a
        b = 8.0 if ns.b is None else ns.b
        rep = scan_envelope_ordering(a, b, ns.n or 500)
    elif prop == "sandwich":
        rep = scan_sandwich(b_per_a=ns.n or 50)
    else:
        rep = scan_jp_dominance(b_per_a=ns.n or 50)
    sys.stdout.write(_report_json(rep) if ns.format == "json" else _report_text(rep))
    return 0 if rep.passed else 1


def _curves_to_csv(table: CurveTable) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(table.columns)
    for row in table.rows:
        w.writerow([_fmt(v) for v in row])
    return buf.getvalue()


def cmd_figdata(ns: argparse.Namespace) -> int:
    table = figure_data(ns.figure)
    if ns.format == "json":
        rows = [dict(zip(table.columns, row)) for row in table.rows]
        _emit(json.dumps(rows, indent=2) + "\n", ns.out)
    else:
        _emit(_curves_to_csv(table), ns.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="marcumq",
        description="First-order Marcum Q reference values, bound catalog, and certification scans.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("eval", help="oracle value plus every applicable bound at one (a, b)")
    pe.add_argument("--a", type=float, required=True)
    pe.add_argument("--b", type=float, required=True)
    pe.add_argument("--format", choices=("csv", "json"), default="csv")
    pe.set_defaults(func=cmd_eval)

    pt = sub.add_parser("table", help="bound comparison table over a b grid")
    pt.add_argument("--preset", choices=tuple(_PRESETS))
    pt.add_argument("--a", type=float)
    pt.add_argument("--b-start", dest="b_start", type=float)
    pt.add_argument("--b-end", dest="b_end", type=float)
    pt.add_argument("--b-step", dest="b_step", type=float)
    pt.add_argument("--ids", help="comma-separated bound ids, e.g. UB1JP,UB1A")
    pt.add_argument("--format", choices=("csv", "json"), default="csv")
    pt.add_argument("--out", help="write to this path instead of stdout")
    pt.set_defaults(func=cmd_table)

    ps = sub.add_parser("scan", help="run one numeric certification scan")
    ps.add_argument("--property", choices=SCAN_PROPERTIES, required=True)
    ps.add_argument("--lo", type=float)
    ps.add_argument("--hi", type=float)
    ps.add_argument("--n", type=int)
    ps.add_argument("--m", type=float)
    ps.add_argument("--a", type=float)
    ps.add_argument("--b", type=float)
    ps.add_argument("--format", choices=("csv", "json"), default="csv")
    ps.set_defaults(func=cmd_scan)

    pf = sub.add_parser("figdata", help="emit curve data for a figure preset (1..10)")
    pf.add_argument("--figure", type=int, required=True)
    pf.add_argument("--format", choices=("csv", "json"), default="csv")
    pf.add_argument("--out", help="write to this path instead of stdout")
    pf.set_defaults(func=cmd_figdata)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        return ns.func(ns)
    except (DomainError, RegimeError, SingularityError, UnknownFigureError, OverflowDomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
