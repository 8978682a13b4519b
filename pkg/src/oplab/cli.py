"""Command-line front end: verification runs, count tables, bijection demos.

Exit codes: 0 when every requested check passes, 1 when any verification
fails, 2 on usage errors (unknown id, malformed ranges, out-of-bounds
parameters, enumeration cap exceeded).

Output is deterministic: identical invocations produce byte-identical
bytes. Wall-clock timings are therefore reported as 0 unless --timings is
given. Ranges are closed intervals written a..b; a bare integer means a
single value. Note that a leading minus sign requires the = form
(--m=-4..4) so the shell token is not mistaken for an option.

Which forms of an identity run depends on the bounds given: --order alone
selects series forms, --n-max alone selects enumerative and inequality
forms, both flags (or neither) select every registered form.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from . import bijections
from . import identities
from . import overpartitions as op

__all__ = ["main"]

_RANGE_RE = re.compile(r"^(-?\d+)(?:\.\.(-?\d+))?$")

_CSV_HEADER = (
    "id,params,range,status,mismatchIndex,mismatchLhs,mismatchRhs,"
    "elapsedMs,anchor,detail"
)


def _range_arg(text: str) -> tuple[int, int]:
    m = _RANGE_RE.match(text)
    if m is None:
        raise argparse.ArgumentTypeError(
            f"expected an integer or a..b range, got {text!r}"
        )
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) is not None else lo
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return (lo, hi)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oplab",
        description="Exact checks for overpartition counts and q-series "
        "identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_list = sub.add_parser("list", help="print the registered identity ids")
    p_list.add_argument("--format", choices=("text", "json"), default="text")

    p_verify = sub.add_parser("verify", help="verify registered identities")
    sel = p_verify.add_mutually_exclusive_group(required=True)
    sel.add_argument("--id", help="identity id to verify")
    sel.add_argument("--all", action="store_true", help="verify every id")
    p_verify.add_argument("--k", type=_range_arg, metavar="A..B")
    p_verify.add_argument("--m", type=_range_arg, metavar="A..B")
    p_verify.add_argument("--ell", type=_range_arg, metavar="A..B")
    p_verify.add_argument("--j", type=_range_arg, metavar="A..B")
    p_verify.add_argument("--order", type=int, help="series truncation order")
    p_verify.add_argument(
        "--n-max", dest="n_max", type=int, help="largest weight checked"
    )
    p_verify.add_argument("--format", choices=("json", "csv"), default="json")
    p_verify.add_argument(
        "--timings",
        action="store_true",
        help="report wall-clock elapsedMs instead of 0",
    )

    p_table = sub.add_parser("table", help="print count tables")
    p_table.add_argument(
        "--stat",
        required=True,
        choices=("pbar", "op21", "mbar", "nbar", "mk"),
    )
    p_table.add_argument("--k", type=_range_arg, metavar="A..B")
    p_table.add_argument("--n-max", dest="n_max", type=int, default=25)
    p_table.add_argument("--format", choices=("json", "csv"), default="json")

    p_bij = sub.add_parser("bijection", help="run the constructive maps")
    p_bij.add_argument(
        "--which", required=True, choices=("section3", "lemma41")
    )
    p_bij.add_argument("--n", type=int, required=True)
    p_bij.add_argument("--j", type=int, help="staircase size (lemma41 only)")
    p_bij.add_argument(
        "--check",
        action="store_true",
        help="exit nonzero unless the full check passes",
    )
    p_bij.add_argument(
        "--trace",
        action="store_true",
        help="include one trace per mapped object",
    )
    return parser


def _usage_error(message: str) -> int:
    print(f"oplab: error: {message}", file=sys.stderr)
    return 2


def _emit_json(payload: object) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def _params_text(params: tuple[tuple[str, int], ...]) -> str:
    return ";".join(f"{k}={v}" for k, v in params)


def _reports_csv(
    reports: Sequence[identities.VerificationReport], timings: bool
) -> str:
    lines = [_CSV_HEADER]
    for r in reports:
        if r.first_mismatch is None:
            idx = lhs = rhs = ""
        else:
            idx, lhs, rhs = (str(x) for x in r.first_mismatch)
        elapsed = str(round(r.elapsed_ms, 3)) if timings else "0"
        fields = [
            r.id,
            _params_text(r.params),
            r.compared,
            r.status,
            str(idx),
            str(lhs),
            str(rhs),
            elapsed,
            r.anchor,
            r.detail or "",
        ]
        for f in fields:
            # the report schema is comma-free by construction
            if "," in f:
                raise ValueError(f"comma in csv field {f!r}")
        lines.append(",".join(fields))
    return "\n".join(lines) + "\n"


def _cmd_list(args: argparse.Namespace) -> int:
    ids = [d.id for d in identities.list_identities()]
    if args.format == "json":
        _emit_json(ids)
    else:
        for ident in ids:
            print(ident)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    overrides = {
        name: value
        for name in ("k", "m", "ell", "j")
        if (value := getattr(args, name)) is not None
    }
    if args.order is not None and not 0 <= args.order <= identities.MAX_ORDER:
        return _usage_error(
            f"--order must be within 0..{identities.MAX_ORDER}"
        )
    if args.n_max is not None and args.n_max < 1:
        return _usage_error("--n-max must be >= 1")
    if args.all:
        selected = [d.id for d in identities.list_identities()]
    else:
        selected = [args.id]
    # bounds given on the command line choose which forms run
    want_series = args.n_max is None or args.order is not None
    want_counts = args.order is None or args.n_max is not None
    reports: list[identities.VerificationReport] = []
    try:
        if not args.all:
            desc = identities.get_identity(args.id)
            names = {name for name, _, _ in desc.schema}
            stray = sorted(set(overrides) - names)
            if stray:
                return _usage_error(
                    f"{desc.id} does not take parameter(s) {stray}"
                )
        for ident in selected:
            desc = identities.get_identity(ident)
            names = {name for name, _, _ in desc.schema}
            local = {k: v for k, v in overrides.items() if k in names}
            for params in identities.expand_grid(desc, local):
                if want_series and desc.has_series:
                    reports.append(
                        identities.verify_series(ident, params, args.order)
                    )
                if want_counts and desc.has_enum:
                    reports.append(
                        identities.verify_enumerative(
                            ident, params, args.n_max
                        )
                    )
                if want_counts and desc.has_inequality:
                    reports.append(
                        identities.verify_inequality(ident, params, args.n_max)
                    )
    except (
        identities.UnknownIdentityError,
        identities.BadParamsError,
        op.EnumerationCapError,
    ) as exc:
        return _usage_error(str(exc))
    reports.sort(key=lambda r: (r.id, r.params, r.compared))
    if args.format == "csv":
        sys.stdout.write(_reports_csv(reports, args.timings))
    else:
        _emit_json([r.to_jsonable(include_timing=args.timings) for r in reports])
    return 0 if all(r.passed for r in reports) else 1


_STAT_FLOOR = {"op21": 0, "mbar": 0, "nbar": 1, "mk": 1}

_STAT_FN = {
    "op21": op.op21,
    "mbar": op.mbar,
    "nbar": op.nbar,
    "mk": op.mk_stat,
}


def _cmd_table(args: argparse.Namespace) -> int:
    if args.n_max < 1:
        return _usage_error("--n-max must be >= 1")
    try:
        if args.stat == "pbar":
            if args.k is not None:
                return _usage_error("--k does not apply to stat pbar")
            rows = [(n, op.pbar(n)) for n in range(1, args.n_max + 1)]
            header = "n,value"
            json_rows = [{"n": n, "value": v} for n, v in rows]
        else:
            if args.k is None:
                return _usage_error(f"stat {args.stat} requires --k")
            k_lo, k_hi = args.k
            if k_lo < _STAT_FLOOR[args.stat]:
                return _usage_error(
                    f"stat {args.stat} requires k >= {_STAT_FLOOR[args.stat]}"
                )
            fn = _STAT_FN[args.stat]
            rows = [
                (n, k, fn(n, k))
                for n in range(1, args.n_max + 1)
                for k in range(k_lo, k_hi + 1)
            ]
            header = "n,k,value"
            json_rows = [{"n": n, "k": k, "value": v} for n, k, v in rows]
    except op.EnumerationCapError as exc:
        return _usage_error(str(exc))
    if args.format == "csv":
        lines = [header] + [",".join(str(x) for x in row) for row in rows]
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        _emit_json(json_rows)
    return 0


def _section3_payload(n: int, trace: bool) -> dict:
    summary = bijections.check_weight_down(n)
    payload = {
        "which": "section3",
        "n": n,
        "aCount": summary["a_count"],
        "bCount": summary["b_count"],
        "cCount": summary["c_count"],
        "mappedPairs": summary["images_in_b"],
        "distinctImages": summary["distinct_images"],
        "roundTripOk": summary["round_trip_ok"],
        "weightsOk": summary["weights_ok"],
        "witnessOk": summary["witness_ok"],
        "pbarHalf": summary["pbar_half"],
        "ok": summary["ok"],
    }
    if trace:
        traces = []
        for pi in op.enumerate_overpartitions(n):
            if bijections.classify(pi, "A").label is bijections.SetLabel.A:
                _, tr = bijections.map_a_to_b(pi)
                traces.append(tr.to_jsonable())
        payload["traces"] = traces
    return payload


def _lemma41_payload(n: int, j: int, trace: bool) -> dict:
    summary = bijections.check_staircase(n, j)
    payload = {
        "which": "lemma41",
        "n": n,
        "j": j,
        "sourceCount": summary["source_count"],
        "targetCount": summary["target_count"],
        "matched": summary["matched"],
        "roundTripOk": summary["round_trip_ok"],
        "ok": summary["ok"],
    }
    if trace:
        traces = []
        for mu in op.enumerate_overpartitions(n - j * j):
            _, tr = bijections.staircase_insert(mu, j)
            traces.append(tr.to_jsonable())
        payload["traces"] = traces
    return payload


def _cmd_bijection(args: argparse.Namespace) -> int:
    if args.n < 1:
        return _usage_error("--n must be >= 1")
    try:
        if args.which == "section3":
            if args.j is not None:
                return _usage_error("--j applies only to lemma41")
            payload = _section3_payload(args.n, args.trace)
        else:
            j = 1 if args.j is None else args.j
            if j < 1 or j * j > args.n:
                return _usage_error(f"need 1 <= j and j^2 <= n, got j={j}")
            payload = _lemma41_payload(args.n, j, args.trace)
    except op.EnumerationCapError as exc:
        return _usage_error(str(exc))
    _emit_json(payload)
    if args.check and not payload["ok"]:
        return 1
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage error, 0 on --help
        code = exc.code
        return code if isinstance(code, int) else 2
    handlers = {
        "list": _cmd_list,
        "verify": _cmd_verify,
        "table": _cmd_table,
        "bijection": _cmd_bijection,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    raise SystemExit(main())
