"""Command-line front door.

Subcommands: bound, mincut, tightness, truncation, tradeoff, simulate,
figure1, figure4.  Fractions are accepted and emitted as "p/q" strings;
--format machine prints exactly one JSON document on stdout.

Exit codes: 0 success, 1 usage error, 2 invariant/assertion failure,
3 infeasible input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import capacity_bound, demo, mincut, model, rlnc, tradeoff
from .flowgraph import build_graph, cut_capacity, edge_list_text, vertex_label

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_ASSERTION = 2
EXIT_INFEASIBLE = 3


class Infeasible(Exception):
    pass


class AssertionFailure(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad fraction {text!r}: {exc}")


def _add_param_flags(sp, need_ab=True, required=True):
    sp.add_argument("-n", type=int, required=required)
    sp.add_argument("-k", type=int, required=required)
    sp.add_argument("-d", type=int, required=required)
    sp.add_argument("-r", type=int, required=required)
    sp.add_argument("-T", type=int, required=required)
    if need_ab:
        sp.add_argument("--alpha", type=_fraction, required=required)
        sp.add_argument("--beta", type=_fraction, required=required)


def _add_format_flag(sp):
    sp.add_argument("--format", choices=("human", "machine"), default="human")


def _params_from_args(args) -> model.SystemParams:
    p = model.SystemParams(n=args.n, k=args.k, d=args.d, r=args.r,
                           alpha=getattr(args, "alpha", Fraction(1)),
                           beta=getattr(args, "beta", Fraction(1)), T=args.T)
    violations = model.validate_params(p)
    if violations:
        raise Infeasible("invalid parameters: " + "; ".join(violations))
    return p


def _emit(doc: dict, fmt: str, human_lines=None):
    if fmt == "machine":
        print(json.dumps(doc, indent=2))
    else:
        for line in (human_lines if human_lines is not None
                     else _render(doc)):
            print(line)


def _render(doc, prefix=""):
    lines = []
    for key, val in doc.items():
        if isinstance(val, dict):
            lines.append(f"{prefix}{key}:")
            lines.extend(_render(val, prefix + "  "))
        elif isinstance(val, list) and val and isinstance(val[0], dict):
            lines.append(f"{prefix}{key}:")
            for item in val:
                lines.extend(_render(item, prefix + "  - "))
        else:
            lines.append(f"{prefix}{key}: {val}")
    return lines


def _bound_doc(res: capacity_bound.BoundResult, p) -> dict:
    prof = res.argmin
    return {
        "value": str(res.value),
        "value_dec": f"{float(res.value):.12g}",
        "T1": sorted(prof.T1),
        "x0": prof.x0,
        "x": {str(s): v for s, v in prof.x},
        "linear_form": {"a": res.linear_form[0], "b": res.linear_form[1]},
        "effective_horizon": capacity_bound.effective_horizon(p),
    }


def cmd_bound(args) -> int:
    p = _params_from_args(args)
    res = capacity_bound.c_lb(p)
    _emit(_bound_doc(res, p), args.format)
    return EXIT_OK


def cmd_mincut(args) -> int:
    if args.instance:
        with open(args.instance) as fh:
            inst = model.load_instance(fh.read())
        report = mincut.instance_capacity(inst)
    else:
        if any(getattr(args, f) is None for f in ("n", "k", "d", "r", "T",
                                                  "alpha", "beta")):
            raise Infeasible("provide either --instance or the full "
                             "parameter flags")
        p = _params_from_args(args)
        report = mincut.storage_capacity(p, limit=args.limit,
                                         canonical=not args.full,
                                         scope=args.scope)
    dc = report.witness_collector
    wg = build_graph(report.witness_instance, dc)
    wcut = mincut.max_flow_min_cut(wg)
    doc = {
        "value": str(report.value),
        "witness_collector": {"s": dc.s, "K": sorted(dc.K)},
        "witness_cut": sorted(vertex_label(v) for v in wcut.cut),
        "witness_instance": model.instance_to_dict(report.witness_instance),
        "truncated": report.truncated,
    }
    _emit(doc, args.format)
    return EXIT_OK


def cmd_tightness(args) -> int:
    p = _params_from_args(args)
    if p.n < p.k + 2 * p.r:
        raise Infeasible(f"tightness construction requires n >= k + 2r "
                         f"= {p.k + 2 * p.r}")
    bound = capacity_bound.c_lb(p)
    inst, sink_side, dc = capacity_bound.adversarial_instance(p, bound.argmin)
    g = build_graph(inst, dc)
    X = g.vertices - frozenset(sink_side)
    cut_val = cut_capacity(g, X)
    flow_val = mincut.max_flow_min_cut(g).value
    doc = {
        "c_lb": str(bound.value),
        "adversarial_cut_capacity": str(cut_val),
        "witness_collector_max_flow": str(flow_val),
        "collector": {"s": dc.s, "K": sorted(dc.K)},
        "cut_source_side": sorted(vertex_label(v) for v in X),
        "instance": model.instance_to_dict(inst),
    }
    if not (bound.value == cut_val == flow_val):
        doc["mismatch"] = True
        _emit(doc, args.format)
        raise AssertionFailure(
            f"tightness mismatch: c_lb={bound.value}, cut={cut_val}, "
            f"flow={flow_val}")
    _emit(doc, args.format)
    return EXIT_OK


def cmd_truncation(args) -> int:
    p = _params_from_args(args)
    if p.T < p.k + p.r:
        raise Infeasible(f"truncation check requires T >= k + r = {p.k + p.r}")
    report = capacity_bound.verify_truncation(p, args.extra)
    doc = {"horizons": report["horizons"],
           "values": [str(v) for v in report["values"]],
           "all_equal": report["all_equal"]}
    _emit(doc, args.format)
    return EXIT_OK if report["all_equal"] else EXIT_ASSERTION


def cmd_tradeoff(args) -> int:
    try:
        curve = tradeoff.sweep_curve(args.n, args.k, args.d, args.r, args.T,
                                     args.B, points=args.grid)
    except ValueError as exc:
        raise Infeasible(str(exc))
    if args.format == "machine":
        doc = {
            "params": {"n": curve.n, "k": curve.k, "d": curve.d,
                       "r": curve.r, "T": curve.T, "B": str(curve.B)},
            "points": [{"tau": str(pt.tau), "alpha": str(pt.alpha),
                        "beta": str(pt.beta)} for pt in curve.points],
        }
        print(json.dumps(doc, indent=2))
    else:
        print(tradeoff.curve_csv(curve))
    return EXIT_OK


def cmd_simulate(args) -> int:
    p = _params_from_args(args)
    try:
        cfg = rlnc.SimConfig(params=p, B=args.B_int, field_w=args.field,
                             trials=args.trials, seed=args.seed)
    except ValueError as exc:
        raise Infeasible(str(exc))
    instance = None
    if args.instance:
        with open(args.instance) as fh:
            instance = model.load_instance(fh.read())
    report = rlnc.achievability_experiment(cfg, instance_source=args.source,
                                           instance=instance)
    _emit(report, args.format)
    if report["violations"]:
        raise AssertionFailure(
            f"{len(report['violations'])} rank/min-cut violations")
    return EXIT_OK


def cmd_figure1(args) -> int:
    inst = demo.example_instance(args.alpha, args.beta)
    g, cuts = demo.example_cuts(args.alpha, args.beta)
    doc = {
        "instance": model.instance_to_dict(inst),
        "collector": {"s": 2, "K": [9, 11, 12]},
        "edges": edge_list_text(g).split("\n"),
        "cuts": [
            {"name": name, "capacity": str(cut_capacity(g, X)),
             "expected": str(expected),
             "source_side": sorted(vertex_label(v) for v in X)}
            for name, X, expected in cuts
        ],
    }
    for cut in doc["cuts"]:
        if cut["capacity"] != cut["expected"]:
            _emit(doc, args.format)
            raise AssertionFailure(f"{cut['name']}: capacity "
                                   f"{cut['capacity']} != {cut['expected']}")
    _emit(doc, args.format)
    return EXIT_OK


def cmd_figure4(args) -> int:
    k, d, r = 4, 9, 2
    curve = tradeoff.sweep_curve(args.n, k, d, r, args.T, args.B,
                                 points=args.grid)
    report = tradeoff.dominance_report(k, d, r, args.B)
    if args.format == "machine":
        def pt(p):
            return {"tau": str(p.tau), "alpha": str(p.alpha),
                    "beta": str(p.beta)}
        doc = {
            "params": {"n": args.n, "k": k, "d": d, "r": r, "T": args.T,
                       "B": str(args.B)},
            "broadcast_curve": [pt(p) for p in curve.points],
            "endpoints": {
                "ms_broadcast": pt(report["ms_broadcast"]),
                "mt_broadcast": pt(report["mt_broadcast"]),
                "ms_cooperative": pt(report["ms_cooperative"]),
                "mt_cooperative": pt(report["mt_cooperative"]),
            },
            "gaps": {"ms": str(report["ms_gap"]), "mt": str(report["mt_gap"])},
        }
        print(json.dumps(doc, indent=2))
    else:
        print(tradeoff.curve_csv(curve, cooperative_endpoints=True))
        print(f"# ms gap (cooperative - broadcast tau): {report['ms_gap']}")
        print(f"# mt gap (cooperative - broadcast tau): {report['mt_gap']}")
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="wdss")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("bound", help="closed-form storage capacity bound")
    _add_param_flags(sp)
    _add_format_flag(sp)
    sp.set_defaults(func=cmd_bound)

    sp = sub.add_parser("mincut", help="capacity by min-cut enumeration")
    _add_param_flags(sp, required=False)
    sp.add_argument("--instance", help="instance document to analyze")
    sp.add_argument("--scope", choices=("enumerate", "adversarial"),
                    default="enumerate")
    sp.add_argument("--limit", type=int, default=None,
                    help="cap on enumerated instances")
    sp.add_argument("--full", action="store_true",
                    help="disable the canonical symmetry reduction")
    _add_format_flag(sp)
    sp.set_defaults(func=cmd_mincut)

    sp = sub.add_parser("tightness",
                        help="certify the bound with the adversarial cut")
    _add_param_flags(sp)
    _add_format_flag(sp)
    sp.set_defaults(func=cmd_tightness)

    sp = sub.add_parser("truncation",
                        help="check horizon saturation by raw enumeration")
    _add_param_flags(sp)
    sp.add_argument("--extra", type=int, default=2)
    _add_format_flag(sp)
    sp.set_defaults(func=cmd_truncation)

    sp = sub.add_parser("tradeoff", help="storage/bandwidth curve sweep")
    _add_param_flags(sp, need_ab=False)
    sp.add_argument("--B", type=_fraction, default=Fraction(1))
    sp.add_argument("--grid", type=int, default=33,
                    help="number of sweep points")
    _add_format_flag(sp)
    sp.set_defaults(func=cmd_tradeoff)

    sp = sub.add_parser("simulate", help="random linear coding experiment")
    _add_param_flags(sp)
    sp.add_argument("--B", dest="B_int", type=int, required=True,
                    help="file size in packets")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--field", type=int, choices=(4, 8, 16), default=8,
                    help="field width w for GF(2^w)")
    sp.add_argument("--source", choices=("adversarial", "random"),
                    default="adversarial")
    sp.add_argument("--instance", help="instance document to simulate")
    _add_format_flag(sp)
    sp.set_defaults(func=cmd_simulate)

    sp = sub.add_parser("figure1", help="worked example with reference cuts")
    sp.add_argument("--alpha", type=_fraction, default=Fraction(1))
    sp.add_argument("--beta", type=_fraction, default=Fraction(1))
    _add_format_flag(sp)
    sp.set_defaults(func=cmd_figure1)

    sp = sub.add_parser("figure4",
                        help="tradeoff curve with scheme comparison "
                             "(k=4, d=9, r=2)")
    sp.add_argument("-n", type=int, default=15)
    sp.add_argument("-T", type=int, default=6)
    sp.add_argument("--B", type=_fraction, default=Fraction(1))
    sp.add_argument("--grid", type=int, default=33)
    _add_format_flag(sp)
    sp.set_defaults(func=cmd_figure4)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE
    try:
        return args.func(args)
    except Infeasible as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except AssertionFailure as exc:
        print(f"assertion failure: {exc}", file=sys.stderr)
        return EXIT_ASSERTION
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
