"""Command-line front end.

Subcommands: ``norm`` and ``tau`` compute norms of a model, ``bounds`` emits
tail-bound tables, ``verify`` compares a bound curve against a model's exact
tail, and ``battery`` runs the full invariant suite.  Output is CSV
(RFC-4180-style, header row) or JSON (one object, stable key order), with
all numbers printed to 9 significant digits so repeated runs are
byte-identical.

Exit codes: 0 ok, 1 parse/usage error, 2 norm is infinite (model outside
the space), 3 mgf-domination norm of a non-centered model, 4 a requested
check failed (battery or verify).
"""

import argparse
import csv
import json
import math
import sys

from . import battery as battery_mod
from . import bounds as bounds_mod
from . import norms
from .errors import CenteringRequiredError, ExporliczError
from .rv_models import parse_model

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_NOT_IN_SPACE = 2
EXIT_CENTERING = 3
EXIT_CHECK_FAILED = 4


def _fmt(v):
    if isinstance(v, str):
        return v
    v = float(v)
    if math.isnan(v):
        return "nan"
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    return f"{v:.9g}"


def _jnum(v):
    if isinstance(v, str):
        return v
    v = float(v)
    if math.isinf(v) or math.isnan(v):
        return _fmt(v)
    return float(_fmt(v))


class _Parser(argparse.ArgumentParser):
    """argparse that exits 1 (not 2) on usage errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)


def parse_t_spec(spec):
    """t-grid mini-spec: 'start:stop:step' (inclusive), or comma list."""
    spec = spec.strip()
    if ":" in spec:
        parts = spec.split(":")
        if len(parts) != 3:
            raise ExporliczError(f"bad t spec {spec!r}: want start:stop:step")
        start, stop, step = (float(p) for p in parts)
        if step <= 0.0 or stop < start:
            raise ExporliczError(f"bad t spec {spec!r}: need step > 0, stop >= start")
        n = int(math.floor((stop - start) / step + 1e-9)) + 1
        return [start + i * step for i in range(n)]
    return [float(p) for p in spec.split(",")]


def _emit_csv(out, params, header, rows):
    w = csv.writer(out, lineterminator="\n")
    if params:
        out.write("# " + ",".join(f"{k}={_fmt(v)}" for k, v in params.items()) + "\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_fmt(v) if isinstance(v, float) else v for v in row])


def _emit_json(out, params, header, rows):
    doc = {}
    if params:
        doc["params"] = {k: _jnum(v) for k, v in params.items()}
    doc["rows"] = [
        {h: (_jnum(v) if isinstance(v, float) else v) for h, v in zip(header, row)}
        for row in rows
    ]
    json.dump(doc, out, indent=2)
    out.write("\n")


def _emit(args, params, header, rows):
    if args.format == "json":
        _emit_json(sys.stdout, params, header, rows)
    else:
        _emit_csv(sys.stdout, params, header, rows)


def cmd_norm(args, kind):
    model = parse_model(args.model)
    try:
        if kind == "tau":
            est = norms.tau_norm(model, args.p, rel_tol=args.rel_tol)
        else:
            est = norms.luxemburg_norm(model, args.p, rel_tol=args.rel_tol)
    except CenteringRequiredError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CENTERING
    header = ["value", "kind", "p", "rel_tol", "certificate"]
    row = [float(est.value), est.kind, float(est.p.p), float(est.rel_tol), est.certificate]
    _emit(args, {}, header, [row])
    if math.isinf(est.value):
        print("not in L_psi_p", file=sys.stderr)
        return EXIT_NOT_IN_SPACE
    return EXIT_OK


def cmd_bounds(args):
    if args.sum:
        a_list = [float(x) for x in args.sum.split(",")]
        a_l2, a_l1 = bounds_mod.hoeffding_sum_params(a_list)
        params = {"a_l2": a_l2, "a_l1": a_l1}
        classic = bounds_mod.hoeffding_classic(a_l2)
        compl = bounds_mod.hoeffding_complementary(a_l1)
    else:
        params = {"a": args.a}
        classic = bounds_mod.hoeffding_classic(args.a)
        compl = bounds_mod.hoeffding_complementary(args.a)
    model = parse_model(args.model) if args.model else None
    ts = parse_t_spec(args.t)
    header = ["t", "classic", "complementary"]
    if model is not None:
        header = ["t", "exact_tail", "classic", "complementary"]
    rows = []
    for t in ts:
        row = [float(t)]
        if model is not None:
            row.append(float(model.tail(t)))
        row.append(float(classic(t)))
        row.append(float(compl(t)))
        rows.append(row)
    _emit(args, params, header, rows)
    return EXIT_OK


def _build_curve(args):
    if args.curve == "classic":
        if args.a is None:
            raise ExporliczError("classic curve needs --a")
        return bounds_mod.hoeffding_classic(args.a)
    if args.curve == "complementary":
        if args.a is None:
            raise ExporliczError("complementary curve needs --a")
        return bounds_mod.hoeffding_complementary(args.a)
    if args.curve == "exp-power":
        if args.scale is None or args.p is None:
            raise ExporliczError("exp-power curve needs --p and --scale")
        return bounds_mod.exp_power_tail_curve(args.p, args.scale)
    if args.curve == "tau":
        if args.p is None:
            raise ExporliczError("tau curve needs --p (and --scale to skip solving)")
        return None  # built after the norm solve
    raise ExporliczError(f"unknown curve {args.curve!r}")


def cmd_verify(args):
    model = parse_model(args.model)
    curve = _build_curve(args)
    if curve is None:  # tau curve: use --scale as K or solve the norm
        k = args.scale
        if k is None:
            est = norms.tau_norm(model.center(), args.p)
            if math.isinf(est.value):
                print("not in L_psi_p", file=sys.stderr)
                return EXIT_NOT_IN_SPACE
            k = est.value
        curve = bounds_mod.tail_from_tau(args.p, k)
    ts = parse_t_spec(args.t)
    report = bounds_mod.verify_bound(model, curve, ts, tol=args.tol)
    header = ["t", "exact_tail", "bound", "violation"]
    rows = [
        [float(t), float(tr), float(b), "yes" if tr > b + args.tol else "no"]
        for t, tr, b in zip(report.t_grid, report.truth, report.bound)
    ]
    params = {"curve": curve.name, "max_gap": report.max_gap,
              "violations": len(report.violations)}
    _emit(args, params, header, rows)
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def cmd_battery(args):
    if args.selftest_bad_tau_constant:
        bounds_mod._TAU_UPPER_SCALE = 0.5
    try:
        lines, ok = battery_mod.battery_report(p_filter=args.p, seed=args.seed)
    finally:
        bounds_mod._TAU_UPPER_SCALE = 1.0
    for line in lines:
        print(line)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


_MODEL_HELP = (
    "model spec: pointmass:c | rademacher[:scale] | uniform:a | gaussian:sigma"
    " | laplace:b | weibull:p_tail,scale | bounded:x@w[,x@w...] | radsum:n"
    " | empirical:path (text file, one value per line, '#' comments)"
)


def build_parser():
    parser = _Parser(prog="exporlicz", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("csv", "json"), default="csv")

    p_norm = sub.add_parser("norm", help="Luxemburg norm of a model")
    p_norm.add_argument("--model", required=True, help=_MODEL_HELP)
    p_norm.add_argument("--p", type=float, required=True)
    p_norm.add_argument("--rel-tol", type=float, default=1e-9, dest="rel_tol")
    add_common(p_norm)

    p_tau = sub.add_parser("tau", help="mgf-domination norm (centered models)")
    p_tau.add_argument("--model", required=True, help=_MODEL_HELP)
    p_tau.add_argument("--p", type=float, required=True)
    p_tau.add_argument("--rel-tol", type=float, default=1e-9, dest="rel_tol")
    add_common(p_tau)

    p_b = sub.add_parser("bounds", help="Hoeffding bound tables")
    group = p_b.add_mutually_exclusive_group(required=True)
    group.add_argument("--a", type=float, help="bound of a single variable")
    group.add_argument("--sum", help="comma list of summand bounds a_k")
    p_b.add_argument("--model", help="optional model for the exact_tail column")
    p_b.add_argument("--t", required=True, help="t grid: start:stop:step or list")
    add_common(p_b)

    p_v = sub.add_parser("verify", help="check a bound curve against an exact tail")
    p_v.add_argument("--model", required=True, help=_MODEL_HELP)
    p_v.add_argument(
        "--curve", required=True,
        choices=("classic", "complementary", "exp-power", "tau"),
    )
    p_v.add_argument("--a", type=float, help="bound parameter for Hoeffding curves")
    p_v.add_argument("--p", type=float, help="exponent for exp-power / tau curves")
    p_v.add_argument("--scale", type=float, help="L for exp-power, K for tau")
    p_v.add_argument("--t", required=True, help="t grid: start:stop:step or list")
    p_v.add_argument("--tol", type=float, default=1e-12)
    add_common(p_v)

    p_y = sub.add_parser("battery", help="run the full verification battery")
    p_y.add_argument("--p", type=float, default=None,
                     help="restrict the battery to one exponent")
    p_y.add_argument("--seed", type=int, default=0)
    p_y.add_argument("--selftest-bad-tau-constant", action="store_true",
                     help=argparse.SUPPRESS)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "norm":
            return cmd_norm(args, "luxemburg")
        if args.command == "tau":
            return cmd_norm(args, "tau")
        if args.command == "bounds":
            return cmd_bounds(args)
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "battery":
            return cmd_battery(args)
        parser.error(f"unknown command {args.command!r}")
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_OK
    except ExporliczError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
