"""Command-line front end.

Exit codes: 0 for pass/success verdicts, 1 for refuted/violated/failed
verdicts, 2 for structural problems (malformed input, unknown ids, bad
arguments). With --json exactly one JSON document goes to stdout and any
human-readable chatter to stderr; without it, text goes to stdout.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Union

from .analysis import (
    DEFAULT_HORIZON,
    DEFAULT_TOL,
    SequenceSpec,
    ball_cover_check,
    converges_to,
    gdelta_diagonal,
    is_cauchy,
    maximal_points,
    properly_converges,
    specialization_order,
    totally_bounded_at,
)
from .catalog import (
    CatalogEntry,
    CatalogSpace,
    catalog_map,
    catalog_names,
    catalog_sequence,
    get_entry,
    random_pm_space,
    validate_entry,
)
from .core import FinitePMSpace, check_axioms, separation_class
from .errors import PMError, StructureError
from .facts import run_fact_suite
from .fixedpoint import (
    DEFAULT_ALPHA_GRID,
    DEFAULT_BUDGET,
    check_condition_max,
    check_condition_min,
    check_contraction,
    constant_map_bottom,
    exhaustive_condition_maps,
    iterate,
)
from .points import Point, format_point, parse_point_ids, parse_rational
from .properties import property_run

Space = Union[FinitePMSpace, CatalogSpace]


def _emit(doc: dict, text_lines: list[str], as_json: bool) -> None:
    if as_json:
        print(json.dumps(doc, indent=2))
        for line in text_lines:
            print(line, file=sys.stderr)
    else:
        for line in text_lines:
            print(line)


def _resolve_space(arg: str) -> tuple[Optional[CatalogEntry], Space]:
    if arg in catalog_names():
        entry = get_entry(arg)
        return entry, entry.space
    path = Path(arg)
    if not path.exists():
        raise StructureError(f"{arg!r} is neither a catalog id nor a file")
    return None, FinitePMSpace.from_json(path.read_text())


def _finite(space: Space) -> FinitePMSpace:
    return space if isinstance(space, FinitePMSpace) else space.finite_sample()


def _resolve_point(space: Space, text: str) -> Point:
    pool = space.points if isinstance(space, FinitePMSpace) else space.canonical_sample
    by_id = {format_point(p): p for p in pool}
    if text in by_id:
        return by_id[text]
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        return text


def _resolve_sequence(arg: str, horizon: Optional[int]) -> tuple[SequenceSpec, int]:
    eff_horizon = horizon or DEFAULT_HORIZON
    try:
        return catalog_sequence(arg), eff_horizon
    except PMError:
        pass
    path = Path(arg)
    if not path.exists():
        raise StructureError(f"{arg!r} is neither a sequence id nor a file")
    doc = json.loads(path.read_text())
    if "explicit" in doc:
        return SequenceSpec.explicit(parse_point_ids([str(s) for s in doc["explicit"]])), eff_horizon
    if "generator" in doc:
        seq = catalog_sequence(str(doc["generator"]))
        return seq, horizon or int(doc.get("horizon", DEFAULT_HORIZON))
    raise StructureError("sequence JSON needs 'explicit' or 'generator'")


def _resolve_map(arg: str):
    return catalog_map(arg)


def _cmd_axioms(args) -> int:
    _, space = _resolve_space(args.space)
    report = check_axioms(_finite(space))
    lines = [f"axioms: {report.verdict}"]
    if not report.ok:
        lines.append(f"violated {report.violated_axiom} at "
                     f"({', '.join(format_point(p) for p in report.witness)})")
        lines.extend(f"  {k} = {v}" for k, v in report.values.items())
    _emit(report.to_dict(), lines, args.json)
    return 0 if report.ok else 1


def _cmd_analyze(args) -> int:
    _, space = _resolve_space(args.space)
    seq, horizon = _resolve_sequence(args.seq, args.horizon)
    tol = parse_rational(args.tol) if args.tol else DEFAULT_TOL
    if args.mode == "cauchy":
        rep = is_cauchy(space, seq, tol=tol, horizon=horizon)
        ok = rep.verdict == "cauchy_to"
        lines = [f"cauchy: {rep.verdict}" + (f" a={rep.a}" if rep.a is not None else "")]
        _emit(rep.to_dict(), lines, args.json)
        return 0 if ok else 1
    if not args.target:
        raise StructureError("plain/proper analysis needs --target")
    target = _resolve_point(space, args.target)
    fn = properly_converges if args.mode == "proper" else converges_to
    rep = fn(space, seq, target, tol=tol, horizon=horizon)
    lines = [f"convergence to {format_point(target)}: {rep.mode}"]
    if rep.certificate:
        lines.append(f"  tail={rep.certificate.tail_index} gap={rep.certificate.achieved_gap}")
    _emit(rep.to_dict(), lines, args.json)
    return 0 if rep.ok else 1


def _cmd_topology(args) -> int:
    _, space = _resolve_space(args.space)
    finite = _finite(space)
    if args.probe == "separation":
        sep = separation_class(finite)
        _emit(sep.to_dict(), [f"t0={sep.t0} t1={sep.t1} hausdorff={sep.hausdorff}"], args.json)
        return 0
    if args.probe == "gdelta":
        gd = gdelta_diagonal(finite)
        _emit(gd.to_dict(), [f"t1={gd.t1} stabilization={gd.stabilization_n} "
                             f"diagonal={gd.equals_diagonal}"], args.json)
        return 0
    if args.probe == "order":
        order = specialization_order(finite)
        lines = [f"{format_point(x)} >= {format_point(y)}"
                 for i, x in enumerate(order.points)
                 for j, y in enumerate(order.points) if i != j and order.matrix[i][j]]
        _emit(order.to_dict(), lines or ["relation is equality"], args.json)
        return 0
    if args.probe == "maximal":
        hats = maximal_points(finite)
        lines = ["maximal: " + ", ".join(sorted(format_point(p) for p in hats))]
        _emit({"maximal": sorted(format_point(p) for p in hats)}, lines, args.json)
        return 0
    if args.probe == "cover":
        centers = [_resolve_point(finite, s) for s in args.centers.split(",")] if args.centers else []
        rep = ball_cover_check(finite, centers, parse_rational(args.eps))
        lines = [f"covers: {rep.covers}" + ("" if rep.covers else f" uncovered={format_point(rep.uncovered)}")]
        _emit(rep.to_dict(), lines, args.json)
        return 0 if rep.covers else 1
    if args.probe == "net":
        target = finite
        if args.restrict:
            target = finite.restrict([_resolve_point(finite, s) for s in args.restrict.split(",")])
        net = totally_bounded_at(target, parse_rational(args.eps))
        lines = [f"net size {net.size}: " + ", ".join(format_point(p) for p in net.centers)]
        _emit(net.to_dict(), lines, args.json)
        return 0
    raise StructureError(f"unknown topology probe {args.probe!r}")


def _cmd_fixedpoint(args) -> int:
    entry, space = _resolve_space(args.space)
    if args.action == "check":
        T = _resolve_map(args.map)
        # --pairs picks the default pair set either way: exhaustive on finite
        # tables, canonical-sample pairs on formula-backed spaces.
        if args.cond == "contraction":
            rep = check_contraction(space, T, parse_rational(args.alpha))
        elif args.cond == "max":
            rep = check_condition_max(space, T, parse_rational(args.alpha))
        else:
            rep = check_condition_min(space, T, args.k)
        lines = [f"{rep.condition}: {rep.verdict} over {rep.pairs_checked} {rep.scope} pairs"]
        if rep.violation:
            v = rep.violation
            lines.append(f"  violated at ({format_point(v.x)}, {format_point(v.y)}): "
                         f"{v.lhs} > {v.rhs}")
        _emit(rep.to_dict(), lines, args.json)
        return 0 if rep.ok else 1
    if args.action == "iterate":
        T = _resolve_map(args.map)
        if not args.start:
            raise StructureError("fixedpoint iterate needs --from")
        x0 = _resolve_point(space, args.start)
        tol = parse_rational(args.tol) if args.tol else DEFAULT_TOL
        known = entry.known_fixed_points if entry else ()
        tr = iterate(space, T, x0, tol=tol, budget=args.budget, known_fixed_points=known)
        lines = [f"outcome: {tr.outcome} after {tr.steps} steps"]
        if tr.fixed_point is not None:
            lines.append(f"fixed point {format_point(tr.fixed_point)}")
        if tr.cauchy_value is not None:
            lines.append(f"settled pairwise value near {tr.cauchy_value}")
        _emit(tr.to_dict(), lines, args.json)
        return 0 if tr.ok else 1
    if args.action == "enumerate":
        finite = _finite(space)
        if args.cond == "contraction":
            survivors = exhaustive_condition_maps(finite, "contraction",
                                                  alpha=parse_rational(args.alpha))
        elif args.cond == "max":
            alphas = ([parse_rational(s) for s in args.alpha_grid.split(",")]
                      if args.alpha_grid else DEFAULT_ALPHA_GRID)
            survivors = exhaustive_condition_maps(finite, "max", alphas=alphas)
        else:
            survivors = exhaustive_condition_maps(finite, "min", k=args.k)
        lines = [f"{len(survivors)} surviving maps"] + [T.name for T in survivors]
        _emit({"count": len(survivors), "maps": [T.name for T in survivors]}, lines, args.json)
        return 0
    if args.action == "bottom":
        finite = _finite(space)
        alphas = ([parse_rational(s) for s in args.alpha_grid.split(",")]
                  if args.alpha_grid else DEFAULT_ALPHA_GRID)
        survivors = constant_map_bottom(finite, alphas)
        lines = ["constant-map bottom: " + ", ".join(format_point(p) for p in survivors)]
        _emit({"bottom": [format_point(p) for p in survivors]}, lines, args.json)
        return 0
    raise StructureError(f"unknown fixedpoint action {args.action!r}")


def _cmd_catalog(args) -> int:
    if args.action == "list":
        names = catalog_names()
        _emit({"spaces": names}, names, args.json)
        return 0
    if args.action == "export":
        if not args.name:
            raise StructureError("catalog export needs a space id")
        doc = get_entry(args.name).space.finite_sample().to_json_dict()
        print(json.dumps(doc, indent=2))
        return 0
    if args.action == "verify":
        names = None if args.all or not args.name else [args.name]
        structural = []
        for name in names or catalog_names():
            structural.extend(f"{name}: {p}" for p in validate_entry(get_entry(name)))
        suite = run_fact_suite(names)
        lines = [f"{'PASS' if r.ok else 'FAIL'} {r.fact_id}: {r.details}" for r in suite.results]
        lines += [f"FAIL structural {s}" for s in structural]
        lines.append(f"{suite.passed} passed, {suite.failed} failed")
        _emit(suite.to_dict(), lines, args.json)
        return 0 if suite.ok and not structural else 1
    raise StructureError(f"unknown catalog action {args.action!r}")


def _cmd_random(args) -> int:
    seed = int(os.environ["PM_SEED"]) if os.environ.get("PM_SEED") else args.seed
    if args.action == "generate":
        space = random_pm_space(seed, args.n, zero_f=args.zero_f)
        print(json.dumps(space.to_json_dict(), indent=2))
        print(f"seed {seed}, {args.n} points", file=sys.stderr)
        return 0
    if args.action == "property-run":
        lo, _, hi = args.seeds.partition(":")
        seeds = range(int(lo), int(hi)) if hi else range(int(lo))
        result = property_run(seeds, max_n=args.max_n)
        lines = [f"seeds {seeds.start}..{seeds.stop - 1}, {result.spaces_checked} spaces, "
                 f"{len(result.failures)} failures, {result.elapsed:.2f}s"]
        lines += [f"  seed {f.seed} (n={f.n}): {f.detail}" for f in result.failures]
        _emit(result.to_dict(), lines, args.json)
        return 0 if result.ok else 1
    raise StructureError(f"unknown random action {args.action!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pm", description="exact partial-metric toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    ax = sub.add_parser("axioms", help="check the partial-metric axioms of a space")
    ax.add_argument("--space", required=True)
    ax.add_argument("--json", action="store_true")
    ax.set_defaults(fn=_cmd_axioms)

    an = sub.add_parser("analyze", help="sequence analysis")
    an_sub = an.add_subparsers(dest="what", required=True)
    seq = an_sub.add_parser("seq", help="convergence / Cauchy analysis of a sequence")
    seq.add_argument("--space", required=True)
    seq.add_argument("--seq", required=True)
    seq.add_argument("--target")
    seq.add_argument("--mode", choices=("plain", "proper", "cauchy"), default="plain")
    seq.add_argument("--tol")
    seq.add_argument("--horizon", type=int)
    seq.add_argument("--json", action="store_true")
    seq.set_defaults(fn=_cmd_analyze)

    topo = sub.add_parser("topology", help="separation, order, covers, nets")
    topo.add_argument("probe", choices=("separation", "gdelta", "order", "maximal",
                                        "cover", "net"))
    topo.add_argument("--space", required=True)
    topo.add_argument("--centers")
    topo.add_argument("--eps", default="1/2")
    topo.add_argument("--restrict")
    topo.add_argument("--json", action="store_true")
    topo.set_defaults(fn=_cmd_topology)

    fp = sub.add_parser("fixedpoint", help="condition checks, iteration, enumeration")
    fp.add_argument("action", choices=("check", "iterate", "enumerate", "bottom"))
    fp.add_argument("--space", required=True)
    fp.add_argument("--map")
    fp.add_argument("--cond", choices=("contraction", "max", "min"), default="max")
    fp.add_argument("--alpha", default="1/2")
    fp.add_argument("--alpha-grid", dest="alpha_grid")
    fp.add_argument("--k", type=int, default=1)
    fp.add_argument("--pairs", choices=("all", "sample"), default="all")
    fp.add_argument("--from", dest="start")
    fp.add_argument("--tol")
    fp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    fp.add_argument("--json", action="store_true")
    fp.set_defaults(fn=_cmd_fixedpoint)

    cat = sub.add_parser("catalog", help="list, export, verify catalog entries")
    cat.add_argument("action", choices=("list", "export", "verify"))
    cat.add_argument("name", nargs="?")
    cat.add_argument("--all", action="store_true")
    cat.add_argument("--json", action="store_true")
    cat.set_defaults(fn=_cmd_catalog)

    rnd = sub.add_parser("random", help="generate random spaces, run the property suite")
    rnd.add_argument("action", choices=("generate", "property-run"))
    rnd.add_argument("--seed", type=int, default=0)
    rnd.add_argument("-n", type=int, default=5)
    rnd.add_argument("--zero-f", dest="zero_f", action="store_true")
    rnd.add_argument("--seeds", default="0:200")
    rnd.add_argument("--max-n", dest="max_n", type=int, default=7)
    rnd.add_argument("--json", action="store_true")
    rnd.set_defaults(fn=_cmd_random)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (PMError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
