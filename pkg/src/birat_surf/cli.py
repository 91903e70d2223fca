"""Command line front end: ``birat-surf <command> ...``.

Exit status is 0 on success, 1 when the answer is negative (a class that is
not homaloidal, an inconsistent invariant record, ...) and 2 when the input
cannot be read.  Inputs are file paths, inline JSON objects, or
``fixture:NAME`` for the bundled examples.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from importlib import resources
from pathlib import Path

from . import cone as cone_mod
from .classifier import SurfaceInvariants, classify, consistency_check
from .cremona import HomaloidalNet, QuadraticMap, is_homaloidal, quadratic_transform
from .errors import BiratError, InconsistentRecord, InsufficientData
from .factorization import factor, round_trip_ok
from .fibration import (BranchData, EllipticFibration, FibreMatrix, canonical_formula_summary,
                        plurigenus_table, riemann_hurwitz_genus, zariski_check)
from .lattice import DivisorClass
from .points import PointConfig
from .sarkisov import run_sarkisov, sarkisov_degree

FIXTURES = ("standard-quadratic", "bdf-cases", "rem-pu-i", "rem-pu-ii", "collinear-3")


class MalformedInput(Exception):
    pass


def fixture_path(name: str):
    if name not in FIXTURES:
        raise MalformedInput(f"unknown fixture {name!r}; available: {', '.join(FIXTURES)}")
    return resources.files("birat_surf") / "fixtures" / f"{name}.json"


def load_json(source: str):
    try:
        if source.lstrip().startswith("{"):
            return json.loads(source)
        if source.startswith("fixture:"):
            return json.loads(fixture_path(source[len("fixture:"):]).read_text())
        return json.loads(Path(source).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise MalformedInput(f"cannot read {source}: {exc}") from exc


def fmt(x):
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return x


def emit(data, as_json: bool, text_lines):
    if as_json:
        print(json.dumps(data, sort_keys=True, indent=2))
    else:
        for line in text_lines:
            print(line)


def _parse(fn, *args):
    """Turn schema errors raised while building inputs into MalformedInput."""
    try:
        return fn(*args)
    except MalformedInput:
        raise
    except (BiratError, ValueError, TypeError, KeyError) as exc:
        raise MalformedInput(str(exc)) from exc


def _read_class_and_config(source):
    data = load_json(source)

    def build():
        dc = DivisorClass.from_json(data)
        config = (PointConfig.from_json(data["config"]) if "config" in data
                  else PointConfig.general(dc.n))
        if len(config) != dc.n:
            raise ValueError(f"{dc.n} multiplicities for {len(config)} points")
        return dc, config
    return _parse(build)


def _read_net(source) -> HomaloidalNet:
    dc, config = _read_class_and_config(source)
    return HomaloidalNet(dc, config)   # NotHomaloidal is a domain answer


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise MalformedInput(f"expected comma-separated integers, got {text!r}") from exc


def cmd_cremona_apply(args):
    dc, config = _read_class_and_config(args.net)
    base = _ints(args.base)
    if len(base) != 3 or len(set(base)) != 3 or not all(0 <= b < dc.n for b in base):
        raise MalformedInput(f"--base needs three distinct slots in 0..{dc.n - 1}")
    qmap = QuadraticMap.on(config, [config.points[s].id for s in base])
    new = quadratic_transform(dc, base)
    emit({"base": base, "kind": qmap.kind.value, "class": new.to_json()}, args.json,
         [f"type {qmap.kind.value} at slots {base}: {dc} -> {new}"])
    return 0


def cmd_cremona_check(args):
    dc, config = _read_class_and_config(args.net)
    ok, reason = is_homaloidal(dc, config)
    emit({"homaloidal": ok, "reason": reason}, args.json,
         ["homaloidal" if ok else f"not homaloidal: {reason}"])
    return 0 if ok else 1


def cmd_factor(args):
    net = _read_net(args.net)
    trace = factor(net)
    steps = []
    lines = [f"start {net.cls} simplicity {trace.initial_simplicity}"]
    for i, st in enumerate(trace.steps, 1):
        steps.append({"step": i, "case": st.case, "kind": st.qmap.kind.value,
                      "base": list(st.qmap.base), "class": st.net.cls.to_json(),
                      "simplicity": list(st.simplicity)})
        lines.append(f"{i}  case {st.case}  base {list(st.qmap.base)}  "
                     f"{st.net.cls}  simplicity {st.simplicity}")
    closing = trace.closing
    lines.append(f"terminal {trace.terminal}"
                 + (f", closing map {closing.kind.value} at {list(closing.base)}" if closing else ""))
    lines.append("composed action sends the net to lines: "
                 + ("yes" if round_trip_ok(trace) else "no"))
    emit({"steps": steps, "terminal": trace.terminal,
          "closing": list(closing.base) if closing else None,
          "round_trip": round_trip_ok(trace)}, args.json, lines)
    return 0


def _degree_json(deg):
    return {"mu": fmt(deg.mu), "lambda": deg.lam, "ell": deg.ell}


def cmd_sarkisov(args):
    net = _read_net(args.net)
    trace = run_sarkisov(net)
    start = sarkisov_degree(trace.states[0])
    lines = [lk.describe() for lk in trace.links]
    links = [{"kind": lk.kind, "center": lk.center, "source": str(lk.source),
              "model": str(lk.target), "before": _degree_json(lk.before),
              "degree": _degree_json(lk.after)} for lk in trace.links]
    emit({"start": _degree_json(start), "links": links}, args.json, lines)
    return 0


def cmd_plurigenus(args):
    if args.fibration:
        data = load_json(args.fibration)
        f = _parse(lambda: EllipticFibration(data["genus"], data["chi"], tuple(data["mults"]),
                                             bool(data.get("exact_for_isotrivial", False))))
        n_max = args.n_max or data.get("n_max", 12)
        cover = data.get("cover")
    else:
        if args.genus is None or args.chi is None:
            raise MalformedInput("give --genus and --chi, or --fibration")
        f = _parse(lambda: EllipticFibration(args.genus, args.chi, tuple(_ints(args.mults or ""))))
        n_max, cover = args.n_max or 12, None
    if n_max < 1:
        raise MalformedInput("--n-max must be positive")
    table = plurigenus_table(f, n_max)
    summary = canonical_formula_summary(f)
    kind = "exact" if f.exact_for_isotrivial else "lower bound"
    lines = [f"P_{n} = {p}" for n, p in table.items()]
    lines.append(f"({kind}); {summary.pullback_power}K is the pull-back of a bundle of degree "
                 f"{summary.pullback_degree} on the base")
    out = {"table": {str(n): p for n, p in table.items()}, "exact": f.exact_for_isotrivial,
           "base_bundle_degree": summary.base_bundle_degree,
           "fractional_parts": [fmt(x) for x in summary.fractional_parts],
           "pullback_power": summary.pullback_power,
           "pullback_degree": summary.pullback_degree}
    if cover is not None:
        b = _parse(lambda: BranchData(cover["group_order"], cover["base_genus"],
                                      tuple(cover["branch"])))
        out["cover_genus"] = riemann_hurwitz_genus(b)
        lines.append(f"Galois cover of order {b.group_order}: genus {out['cover_genus']}")
    emit(out, args.json, lines)
    return 0


def cmd_zariski(args):
    data = load_json(args.matrix)
    m = _parse(FibreMatrix.from_json, data)
    v = zariski_check(m)
    out = {"semidefinite": v.semidefinite, "kernel_dim": v.kernel_dim,
           "kernel_is_span_of_weights": v.kernel_is_span_of_weights,
           "components": v.components}
    emit(out, args.json, [f"negative semidefinite: {'yes' if v.semidefinite else 'no'}",
                          f"kernel dimension: {v.kernel_dim}",
                          f"kernel spanned by the fibre: {'yes' if v.kernel_is_span_of_weights else 'no'}",
                          f"connected components: {v.components}"])
    return 0 if v.semidefinite else 1


def cmd_classify(args):
    data = load_json(args.invariants)
    s = _parse(SurfaceInvariants.from_json, data)
    try:
        c = classify(s)
    except InconsistentRecord as exc:
        msg = ("impossible case" if any(v.startswith("impossible case") for v in exc.violations)
               else "inconsistent record")
        print(json.dumps({"error": msg, "violations": list(exc.violations)}, sort_keys=True))
        return 1
    except InsufficientData as exc:
        print(json.dumps({"error": "insufficient data", "clauses": list(exc.clauses),
                          "violations": consistency_check(s)}, sort_keys=True))
        return 1
    out = c.to_json()
    out["violations"] = []
    print(json.dumps(out, sort_keys=True))
    return 0


def _class_lines(classes):
    return [str(c) for c in classes]


def cmd_cone(args):
    if args.cone_command == "hirzebruch":
        if args.n < 0:
            raise MalformedInput("--n must be non-negative")
        c = cone_mod.hirzebruch_cone(args.n)
        sq = c.self_intersections()
        out = {"rays": [{"label": lab, "coords": list(r), "square": s}
                        for lab, r, s in zip(c.labels, c.rays, sq)],
               "polyhedral": c.polyhedral, "extremal": c.extremal()}
        emit(out, args.json, [f"{lab}: square {s}" for lab, s in zip(c.labels, sq)])
        return 0
    if args.cone_command == "neg-curves":
        if not 1 <= args.points <= 8:
            raise MalformedInput("--points must lie in 1..8")
        classes = cone_mod.enumerate_minus_one_classes(args.points)
        emit({"count": len(classes), "classes": [c.to_json() for c in classes]}, args.json,
             [f"{len(classes)} classes"] + _class_lines(classes))
        return 0
    rep = cone_mod.collinear_blowup_cone()
    out = {"rays": {lab: list(r) for lab, r in zip(rep.cone.labels, rep.cone.rays)},
           "anticanonical_square": rep.anticanonical_square,
           "minus_k_degrees": list(rep.minus_k_degrees),
           "k_trivial_rays": list(rep.k_trivial_rays),
           "degree_bound": rep.degree_bound,
           "k_trivial_solutions": [c.to_json() for c in rep.k_trivial_solutions],
           "minus_one_solutions": [c.to_json() for c in rep.minus_one_solutions],
           "square_zero_solutions": [c.to_json() for c in rep.square_zero_solutions],
           "extremal": list(rep.extremal), "ok": rep.ok}
    lines = [f"rays: {', '.join(rep.cone.labels)}",
             f"(-K)^2 = {rep.anticanonical_square}",
             f"-K.R = {list(rep.minus_k_degrees)}",
             f"K-trivial rays: {', '.join(rep.k_trivial_rays)}",
             f"degree bound {rep.degree_bound}: {len(rep.k_trivial_solutions)} K-trivial, "
             f"{len(rep.minus_one_solutions)} (-1) classes, square-zero classes "
             + ", ".join(map(str, rep.square_zero_solutions)),
             f"extremal: {list(rep.extremal)}",
             "ok" if rep.ok else "FAILED"]
    emit(out, args.json, lines)
    return 0 if rep.ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="birat-surf", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def fmt_flags(sp):
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--json", dest="json", action="store_true", help="JSON output")
        g.add_argument("--text", dest="json", action="store_false", help="text output (default)")

    cr = sub.add_parser("cremona", help="quadratic transforms and homaloidal checks")
    crs = cr.add_subparsers(dest="cremona_command", required=True)
    ap = crs.add_parser("apply", help="apply a quadratic map to a class")
    ap.add_argument("--net", required=True)
    ap.add_argument("--base", required=True, help="three slots, e.g. 0,1,2")
    fmt_flags(ap)
    ap.set_defaults(func=cmd_cremona_apply)
    ck = crs.add_parser("check", help="test the homaloidal conditions")
    ck.add_argument("--net", required=True)
    fmt_flags(ck)
    ck.set_defaults(func=cmd_cremona_check)

    fa = sub.add_parser("factor", help="factor a homaloidal net into quadratic maps")
    fa.add_argument("--net", required=True)
    fmt_flags(fa)
    fa.set_defaults(func=cmd_factor)

    sa = sub.add_parser("sarkisov", help="untwist a homaloidal net through Sarkisov links")
    sa.add_argument("--net", required=True)
    fmt_flags(sa)
    sa.set_defaults(func=cmd_sarkisov)

    pl = sub.add_parser("plurigenus", help="plurigenera of an elliptic fibration")
    pl.add_argument("--genus", type=int)
    pl.add_argument("--chi", type=int)
    pl.add_argument("--mults", default="")
    pl.add_argument("--n-max", type=int, default=None)
    pl.add_argument("--fibration", help="JSON with genus, chi, mults")
    fmt_flags(pl)
    pl.set_defaults(func=cmd_plurigenus)

    za = sub.add_parser("zariski", help="check a fibre intersection matrix")
    za.add_argument("--matrix", required=True)
    fmt_flags(za)
    za.set_defaults(func=cmd_zariski)

    cl = sub.add_parser("classify", help="Kodaira dimension from invariants")
    cl.add_argument("--invariants", required=True)
    cl.set_defaults(func=cmd_classify, json=True)

    co = sub.add_parser("cone", help="cones of curves for the worked examples")
    cos = co.add_subparsers(dest="cone_command", required=True)
    hz = cos.add_parser("hirzebruch")
    hz.add_argument("--n", type=int, required=True)
    fmt_flags(hz)
    ng = cos.add_parser("neg-curves")
    ng.add_argument("--points", type=int, required=True)
    fmt_flags(ng)
    ce = cos.add_parser("collinear-example")
    fmt_flags(ce)
    co.set_defaults(func=cmd_cone)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except MalformedInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BiratError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
