"""Batch command line: run estimators, generate constructions, verify gaps.

Exit codes: 0 ok, 2 usage, 3 parse/metadata error, 4 precondition
violation, 5 construction size guard.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .diam import diam_folklore_2approx, diam_linear_lessthan2
from .dense import approx_on_spanner, diam_dense_32, ecc_dense_53
from .eccen import ecc_2approx, ecc_2plusdelta, ecc_folklore_3approx, source_radius
from .graph import UNREACHABLE, GraphFormatError, load_graph, load_vertex_set
from .hardness import (BUILDERS, ConstructionSizeError, MetadataError, gen_ov,
                       load_construction, save_construction, verify_construction)
from .search import exact_diameter, exact_st_diameter
from .stdiam import STInstance, st_2approx_sqrt, st_2approx_true, st_2approx_weighted, st_via_diameter

RUN_METHODS = ("exact", "ecc2", "ecc2d", "ecc-folk", "radius", "diam-folk",
               "diam-lin", "diam-dense", "ecc-dense", "st3", "st2", "st2true",
               "st-equiv", "spanner-compose")
SET_METHODS = ("st3", "st2", "st2true", "st-equiv")

EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_PRECONDITION = 4
EXIT_SIZE = 5


def _jsonable(x):
    if x == UNREACHABLE:
        return None
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _render(report: dict, as_json: bool) -> str:
    if as_json:
        return json.dumps({k: _jsonable(v) for k, v in report.items()}, sort_keys=True)
    parts = []
    for key, value in report.items():
        if isinstance(value, (list, tuple)):
            value = ",".join("unreachable" if v == UNREACHABLE else str(v) for v in value)
        elif value == UNREACHABLE:
            value = "unreachable"
        parts.append(f"{key}={value}")
    return " ".join(parts)


def _run(args) -> int:
    try:
        g = load_graph(args.input)
        sets = None
        if args.sets:
            sets = (load_vertex_set(args.sets[0]), load_vertex_set(args.sets[1]))
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except GraphFormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE

    method = args.method
    if method in SET_METHODS and sets is None:
        print(f"error: {method} needs --sets S.txt T.txt", file=sys.stderr)
        return EXIT_USAGE
    tau = args.tau if args.tau is not None else Fraction(1, 4)
    seed = args.seed
    report = {"method": method, "n": g.n, "m": g.m, "seed": None}

    t0 = time.perf_counter()
    try:
        if method == "exact":
            if sets is not None:
                report["estimate"] = exact_st_diameter(g, sets[0], sets[1])
            else:
                report["estimate"] = exact_diameter(g)
        elif method == "ecc2":
            est = ecc_2approx(g, seed)
            report.update(estimates=est.values, seed=seed,
                          unreachable=est.has_unreachable)
        elif method == "ecc2d":
            est = ecc_2plusdelta(g, tau, seed)
            report.update(estimates=est.values, seed=seed, tau=str(tau))
        elif method == "ecc-folk":
            report["estimates"] = ecc_folklore_3approx(g).values
        elif method == "radius":
            variant = "2plusdelta" if args.tau is not None else "2approx"
            vertex, value = source_radius(g, variant, seed, tau)
            report.update(estimate=value, vertex=vertex, seed=seed)
        elif method == "diam-folk":
            report["estimate"] = diam_folklore_2approx(g)
        elif method == "diam-lin":
            report["estimate"] = diam_linear_lessthan2(g)
        elif method == "diam-dense":
            report.update(estimate=diam_dense_32(g, seed), seed=seed)
        elif method == "ecc-dense":
            report.update(estimates=ecc_dense_53(g, seed).values, seed=seed)
        elif method == "st3":
            from .stdiam import st_3approx
            value, pair = st_3approx(STInstance(g, sets[0], sets[1]))
            report.update(estimate=value, witness=list(pair))
        elif method == "st2":
            inst = STInstance(g, sets[0], sets[1])
            if g.unit_weights:
                report.update(estimate=st_2approx_sqrt(inst, seed), seed=seed)
            else:
                report.update(estimate=st_2approx_weighted(inst, seed), seed=seed)
        elif method == "st2true":
            inst = STInstance(g, sets[0], sets[1])
            if g.unit_weights:
                report.update(estimate=st_2approx_true(inst, seed), seed=seed)
            else:
                report.update(estimate=st_2approx_weighted(inst, seed, true_mode=True),
                              seed=seed)
        elif method == "st-equiv":
            inst = STInstance(g, sets[0], sets[1])
            report["estimate"] = st_via_diameter(inst, exact_diameter)
        elif method == "spanner-compose":
            inner = {"exact": exact_diameter,
                     "diam-folk": diam_folklore_2approx,
                     "diam-lin": diam_linear_lessthan2}[args.inner]
            report.update(estimate=approx_on_spanner(g, inner, seed),
                          inner=args.inner, seed=seed)
    except ValueError as exc:
        print(f"precondition error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    report["millis"] = int((time.perf_counter() - t0) * 1000)
    print(_render(report, args.json))
    return 0


def _gen(args) -> int:
    name = args.construction
    fixed_k = {"5v8": 3, "6v10": 3, "8v13": 4, "ecc-dir": 2}
    k = args.k
    if name in fixed_k:
        if k is not None and k != fixed_k[name]:
            print(f"error: construction {name} is fixed at k={fixed_k[name]}", file=sys.stderr)
            return EXIT_USAGE
        k = fixed_k[name]
    elif k is None:
        print(f"error: construction {name} needs --k", file=sys.stderr)
        return EXIT_USAGE
    if name == "3km4" and k < 3:
        print("error: 3km4 needs k >= 3", file=sys.stderr)
        return EXIT_USAGE
    if name == "ecc-dir" and args.L is None:
        print("error: ecc-dir needs --L", file=sys.stderr)
        return EXIT_USAGE
    try:
        inst = gen_ov(k, args.n, args.d, args.mode, args.seed)
        if name == "ecc-dir":
            out = BUILDERS[name](inst, args.L, max_edges=args.max_edges)
        else:
            out = BUILDERS[name](inst, max_edges=args.max_edges)
    except ConstructionSizeError as exc:
        print(f"size guard: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    graph_path, meta_path = save_construction(out, args.out)
    print(f"wrote {graph_path} ({out.graph.n} vertices, {out.graph.m} edges) and {meta_path}")
    return 0


def _verify(args) -> int:
    try:
        g, meta = load_construction(args.graph, args.meta)
        checks = verify_construction(g, meta)
    except (OSError, GraphFormatError, MetadataError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    ok = True
    for check in checks:
        status = "PASS" if check.passed else "FAIL"
        print(f"{status}: {check.name} ({check.detail})")
        ok = ok and check.passed
    return 0 if ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diamecc",
        description="Graph diameter / eccentricity / S-T diameter estimators "
                    "and hardness-construction tooling.")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run an estimator or exact oracle on a graph file")
    run.add_argument("method", choices=RUN_METHODS)
    run.add_argument("--input", required=True, help="edge-list graph file")
    run.add_argument("--sets", nargs=2, metavar=("S", "T"), help="vertex-set files for st-* methods")
    run.add_argument("--seed", type=int, default=0)
    run.add_argument("--tau", type=Fraction, default=None, metavar="P/Q",
                     help="exact rational threshold for ecc2d / radius")
    run.add_argument("--inner", choices=("exact", "diam-folk", "diam-lin"),
                     default="diam-folk", help="inner algorithm for spanner-compose")
    run.add_argument("--json", action="store_true", help="one JSON object per line")
    run.set_defaults(func=_run)

    gen = sub.add_parser("gen", help="generate a hardness construction")
    gen.add_argument("--construction", required=True, choices=sorted(BUILDERS))
    gen.add_argument("--k", type=int, default=None)
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--d", type=int, required=True)
    gen.add_argument("--L", type=int, default=None, help="path length for ecc-dir")
    gen.add_argument("--mode", choices=("unsat", "planted"), default="unsat")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--max-edges", type=int, default=2_000_000)
    gen.add_argument("--out", required=True, help="output prefix (PREFIX.graph, PREFIX.meta.json)")
    gen.set_defaults(func=_gen)

    ver = sub.add_parser("verify", help="recheck a construction's promised gap with the exact oracle")
    ver.add_argument("--graph", required=True)
    ver.add_argument("--meta", required=True)
    ver.set_defaults(func=_verify)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
