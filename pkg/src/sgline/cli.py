"""Command-line front end.

Exit codes: 0 line consistent (or success), 1 not line consistent (or suite
failure), 2 parse error, 3 circle cap exceeded or invalid plan, 4 graph not
simple where a line graph is needed, 5 the fast and brute-force verdicts
disagree.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
from pathlib import Path

from . import suites
from .constructions import (
    PlanA,
    PlanB,
    PlanC,
    PlanD,
    apply_plan_a,
    apply_plan_b,
    apply_plan_c,
    apply_plan_d,
    parse_plan,
    sample_plan_a,
    sample_plan_b,
    sample_plan_c,
    sample_plan_d,
    serialize_plan,
)
from .core import parse_signed_graph, serialize_signed_graph, serialize_vertex_signed_graph
from .exceptions import CircleCapExceeded, InvalidPlan, NotSimple, ParseError, PropertyViolated
from .generators import random_sparse_graph
from .linegraph import DEFAULT_CAP, is_line_consistent_oracle, line_graph
from .properties import is_line_consistent
from .recovery import recover_plan
from .structure import suppress_divalent

EXIT_OK, EXIT_NO, EXIT_PARSE, EXIT_CAP, EXIT_NOT_SIMPLE, EXIT_DISAGREE = range(6)
EXIT_INVALID_PLAN = EXIT_CAP


def default_cap() -> int:
    raw = os.environ.get("SGLINE_CAP")
    if not raw:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise SystemExit(f"sgline: SGLINE_CAP must be an integer, got {raw!r}") from None
    if cap <= 0:
        raise SystemExit("sgline: SGLINE_CAP must be positive")
    return cap


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _write(path, text: str, out):
    if path is None or path == "-":
        out.write(text)
    else:
        Path(path).write_text(text)


def _load_graph(path, err):
    try:
        return parse_signed_graph(_read(path))
    except ParseError as e:
        err.write(f"parse error: {e}\n")
        return None


def cmd_check(args, out, err) -> int:
    s = _load_graph(args.path, err)
    if s is None:
        return EXIT_PARSE
    rep = is_line_consistent(s, allow_nonsimple=True)
    out.write(f"vertices: {s.n_vertices}\nedges: {s.graph.n_edges}\n")
    out.write(f"balanced: {_yes(rep.balanced)}\n")
    if rep.balance.witness_circle is not None:
        out.write("witness-circle: " + " ".join(map(str, rep.balance.witness_circle.edge_seq)) + "\n")
    elif rep.balance.witness_cut:
        out.write("witness-cut: " + " ".join(map(str, sorted(rep.balance.witness_cut))) + "\n")
    out.write(f"property2: {_yes(rep.property_ok)}\n")
    for v in rep.violations:
        out.write(
            f"violation {v.p2_clause} vertex {v.vertex} degree {v.degree} negative-degree {v.negative_degree}\n"
        )
    if rep.line_consistent is None:
        out.write("line-consistent: undefined (graph is not simple)\n")
        return EXIT_NOT_SIMPLE
    out.write(f"line-consistent: {_yes(rep.line_consistent)}\n")
    if args.oracle:
        cap = args.cap or default_cap()
        try:
            oracle = is_line_consistent_oracle(s, cap)
        except CircleCapExceeded as e:
            out.write(f"oracle: cap exceeded ({e})\n")
            return EXIT_CAP
        out.write(f"oracle: {_yes(oracle)}\n")
        if oracle != rep.line_consistent:
            out.write("DISAGREE\n")
            return EXIT_DISAGREE
        out.write("AGREE\n")
    return EXIT_OK if rep.line_consistent else EXIT_NO


_APPLY = {"a": apply_plan_a, "b": apply_plan_b, "c": apply_plan_c, "d": apply_plan_d}
_TYPES = {"a": PlanA, "b": PlanB, "c": PlanC, "d": PlanD}


def _sample(kind: str, seed: int):
    if kind == "a":
        base = random_sparse_graph(random.Random(f"plan-a-base:{seed}"), 8, 3)
        return sample_plan_a(base, seed)
    return {"b": sample_plan_b, "c": sample_plan_c, "d": sample_plan_d}[kind](seed)


def cmd_construct(args, out, err) -> int:
    if args.random:
        plan = _sample(args.kind, args.seed)
    else:
        try:
            plan = parse_plan(_read(args.plan))
        except ParseError as e:
            err.write(f"parse error: {e}\n")
            return EXIT_PARSE
        if not isinstance(plan, _TYPES[args.kind]):
            err.write(f"plan file is not a plan {args.kind}\n")
            return EXIT_PARSE
    try:
        result = _APPLY[args.kind](plan)
    except InvalidPlan as e:
        for v in e.violations:
            err.write(f"violation {v}\n")
        return EXIT_INVALID_PLAN
    if args.kind == "c":
        result, derived = result
        if args.base_out:
            Path(args.base_out).write_text(serialize_signed_graph(derived))
    _write(args.output, serialize_signed_graph(result), out)
    if args.random:
        plan_path = args.plan_out or (f"{args.output}.plan" if args.output and args.output != "-" else None)
        if plan_path:
            Path(plan_path).write_text(serialize_plan(plan))
        else:
            out.write(serialize_plan(plan))
    return EXIT_OK


def _violation_lines(violations) -> str:
    return "".join(f"{v}\n" for v in violations)


def cmd_recover(args, out, err) -> int:
    s = _load_graph(args.path, err)
    if s is None:
        return EXIT_PARSE
    try:
        plan = recover_plan(s)
    except PropertyViolated as e:
        err.write("no plan: graph fails the local degree property\n" + _violation_lines(e.violations))
        return EXIT_NO
    _write(args.output, serialize_plan(plan), out)
    return EXIT_OK


def cmd_suppress(args, out, err) -> int:
    s = _load_graph(args.path, err)
    if s is None:
        return EXIT_PARSE
    res = suppress_divalent(s)
    _write(args.output, serialize_signed_graph(res.reduced), out)
    if args.output and args.output != "-":
        out.write(f"vertices: {s.n_vertices} -> {res.reduced.n_vertices}\n")
        out.write(f"edges: {s.graph.n_edges} -> {res.reduced.graph.n_edges}\n")
        for r in sorted(res.edge_expansion):
            out.write(f"edge {r}: {' '.join(map(str, res.edge_expansion[r]))}\n")
    return EXIT_OK


def cmd_linegraph(args, out, err) -> int:
    s = _load_graph(args.path, err)
    if s is None:
        return EXIT_PARSE
    try:
        res = line_graph(s)
    except NotSimple as e:
        err.write(f"not simple: {e}\n")
        return EXIT_NOT_SIMPLE
    _write(args.output, serialize_vertex_signed_graph(res.lg), out)
    return EXIT_OK


def cmd_equiv_suite(args, out, err) -> int:
    cap = args.cap or default_cap()
    specs = suites.default_suites(args.seeds, args.max_vertices, cap)
    results = suites.run_suites(specs)
    if args.mutate:
        results.append(suites.fixture_suite(mutate=True, cap=cap))
    out.write(suites.combined_report(results))
    failed = any(not r.ok for r in results)
    if failed:
        written = suites.dump_counterexamples(results, args.dump)
        out.write(f"counterexample-files: {len(written)} in {args.dump}\n")
    return EXIT_NO if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sgline", description="Line consistency of signed graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="decide line consistency of an sg file")
    c.add_argument("path")
    c.add_argument("--oracle", action="store_true", help="also run the brute-force line-graph check")
    c.add_argument("--cap", type=int, help="circle cap for the oracle (default $SGLINE_CAP or 100000)")
    c.set_defaults(func=cmd_check)

    k = sub.add_parser("construct", help="apply or sample a construction plan")
    k.add_argument("kind", choices=sorted(_APPLY))
    src = k.add_mutually_exclusive_group(required=True)
    src.add_argument("--plan", help="plan file to apply")
    src.add_argument("--random", action="store_true", help="sample a plan")
    k.add_argument("--seed", type=int, default=0)
    k.add_argument("-o", "--output", help="output sg file (default stdout)")
    k.add_argument("--plan-out", help="where to write a sampled plan (default <output>.plan)")
    k.add_argument("--base-out", help="plan c: write the derived base signing here")
    k.set_defaults(func=cmd_construct)

    r = sub.add_parser("recover", help="recover the Construction B plan of an sg file")
    r.add_argument("path")
    r.add_argument("-o", "--output")
    r.set_defaults(func=cmd_recover)

    s = sub.add_parser("suppress", help="suppress all suppressible divalent vertices")
    s.add_argument("path")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_suppress)

    lg = sub.add_parser("linegraph", help="write the vertex-signed line graph")
    lg.add_argument("path")
    lg.add_argument("-o", "--output")
    lg.set_defaults(func=cmd_linegraph)

    e = sub.add_parser("equiv-suite", help="run the randomized equivalence suites")
    e.add_argument("--seeds", type=int, help="instances per randomized suite (default: full sizes)")
    e.add_argument("--max-vertices", type=int, help="vertex bound for random graphs (default 8)")
    e.add_argument("--cap", type=int)
    e.add_argument("--mutate", action="store_true", help="add a deliberately broken fixture check")
    e.add_argument("--dump", default="sgline-counterexamples", help="directory for counterexamples")
    e.set_defaults(func=cmd_equiv_suite)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out, err)
    except FileNotFoundError as e:
        err.write(f"sgline: {e}\n")
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
