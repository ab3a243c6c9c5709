"""Randomized and exhaustive equivalence suites.

Each suite runs instance ``i`` from ``random.Random(f"<stream>:{i}")`` so that
instances are independent, reproducible one at a time, and identical between
runs.  Suites return a ``SuiteResult`` whose ``report()`` text holds no
timings or addresses and is therefore byte-stable.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Optional

from .balance import is_balanced, is_balanced_cut, is_balanced_switching
from .constructions import (
    apply_plan_a,
    apply_plan_b,
    apply_plan_c,
    apply_plan_d,
    sample_plan_a,
    sample_plan_b,
    sample_plan_c,
    sample_plan_d,
    serialize_plan,
)
from .core import Graph, SignedGraph, path_sign, serialize_signed_graph
from .exceptions import CircleCapExceeded, SglineError
from .generators import (
    NEGATIVE_PROBS,
    random_multigraph,
    random_signing,
    random_simple_graph,
    random_sparse_graph,
    random_two_connected_graph,
)
from .linegraph import DEFAULT_CAP, is_line_consistent_oracle
from .properties import corollary2_check, is_line_consistent, property2_literal, property3_local
from .recovery import recover_plan, round_trip_check
from .structure import enumerate_circles, suppress_divalent

EXHAUSTIVE_LIMIT = 1_000_000


@dataclass
class Counterexample:
    seed: object
    detail: str
    graph: Optional[SignedGraph] = None
    plan_text: Optional[str] = None


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    counterexamples: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.passed > 0

    def record(self, good: bool, seed=None, detail="", graph=None, plan_text=None):
        if good:
            self.passed += 1
        else:
            self.failed += 1
            self.counterexamples.append(Counterexample(seed, detail, graph, plan_text))

    def report(self) -> str:
        lines = [
            f"suite: {self.name}",
            f"instances: {self.passed + self.failed + self.skipped}",
            f"passed: {self.passed}",
            f"failed: {self.failed}",
        ]
        if self.skipped:
            lines.append(f"skipped: {self.skipped}")
        for c in sorted(self.counterexamples, key=lambda c: str(c.seed)):
            lines.append(f"counterexample: seed {c.seed} {c.detail}")
        lines.append(f"status: {'pass' if self.ok else 'FAIL'}")
        return "\n".join(lines) + "\n"


def _rng(stream: str, i: int) -> random.Random:
    return random.Random(f"{stream}:{i}")


def characterization_stream(i: int, max_vertices=8, max_edges=14) -> SignedGraph:
    """Instance ``i`` of the random simple signed graphs shared by the
    characterization and round-trip suites."""
    rng = _rng("characterization", i)
    g = random_simple_graph(rng, max_vertices, max_edges)
    return random_signing(rng, g, NEGATIVE_PROBS[i % len(NEGATIVE_PROBS)])


def _fast_verdict(s: SignedGraph) -> bool:
    return is_line_consistent(s).line_consistent


def characterization_suite(seeds=5000, max_vertices=8, max_edges=14, cap=DEFAULT_CAP, checker=None):
    """Fast decision procedure against the line-graph circle oracle."""
    checker = checker or _fast_verdict
    res = SuiteResult("characterization")
    for i in range(seeds):
        s = characterization_stream(i, max_vertices, max_edges)
        try:
            oracle = is_line_consistent_oracle(s, cap)
        except CircleCapExceeded:
            res.record(False, i, "oracle circle cap exceeded", s)
            continue
        fast = checker(s)
        res.record(fast == oracle, i, f"fast {fast} oracle {oracle}", s)
    return res


def all_simple_graphs(max_vertices: int):
    """Every labelled simple graph on 1..max_vertices vertices."""
    for n in range(1, max_vertices + 1):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            chosen = [p for k, p in enumerate(pairs) if mask >> k & 1]
            yield Graph(n, [(e, u, v) for e, (u, v) in enumerate(chosen)])


def local_property_exhaustive_suite(max_vertices=5, cap=DEFAULT_CAP, limit=EXHAUSTIVE_LIMIT):
    """Circle-quantified property against the local one on every simple graph
    with every sign pattern, up to ``limit`` instances."""
    res = SuiteResult("local-property-exhaustive")
    count = 0
    for gi, g in enumerate(all_simple_graphs(max_vertices)):
        circles = enumerate_circles(g, cap)
        ids = g.edge_ids
        for signs in product((1, -1), repeat=len(ids)):
            if count >= limit:
                return res
            count += 1
            s = SignedGraph(g, dict(zip(ids, signs)))
            lit = property2_literal(s, cap, circles).ok
            loc = property3_local(s).ok
            res.record(lit == loc, f"g{gi}", f"literal {lit} local {loc}", s)
    return res


def local_property_random_suite(seeds=5000, max_vertices=8, cap=DEFAULT_CAP):
    """Same comparison on random multigraphs with loops."""
    res = SuiteResult("local-property-multigraph")
    for i in range(seeds):
        rng = _rng("multigraph-property", i)
        g = random_multigraph(rng, max_vertices, 12)
        s = random_signing(rng, g, NEGATIVE_PROBS[i % 3])
        try:
            lit = property2_literal(s, cap).ok
        except CircleCapExceeded:
            res.record(False, i, "circle cap exceeded", s)
            continue
        loc = property3_local(s).ok
        res.record(lit == loc, i, f"literal {lit} local {loc}", s)
    return res


def _random_signed_multigraph(stream: str, i: int, max_vertices=8) -> SignedGraph:
    rng = _rng(stream, i)
    if rng.random() < 0.5:
        g = random_multigraph(rng, max_vertices, 12)
    else:
        g = random_sparse_graph(rng, max_vertices, 4)
    return random_signing(rng, g, NEGATIVE_PROBS[i % 3])


def circles_all_positive(s: SignedGraph, cap=DEFAULT_CAP) -> bool:
    return all(path_sign(s, c) > 0 for c in enumerate_circles(s.graph, cap))


def balance_suite(seeds=5000, max_vertices=8, cap=DEFAULT_CAP, exhaustive_edges=10):
    """Switching against cut balance, plus every circle's sign on small instances."""
    res = SuiteResult("balance")
    for i in range(seeds):
        s = _random_signed_multigraph("balance", i, max_vertices)
        sw = is_balanced_switching(s).balanced
        cut = is_balanced_cut(s)
        good = sw == cut
        detail = f"switching {sw} cut {cut}"
        if s.graph.n_edges <= exhaustive_edges:
            circ = circles_all_positive(s, cap)
            good = good and circ == sw
            detail += f" circles {circ}"
        res.record(good, i, detail, s)
    return res


def suppression_suite(seeds=5000, max_vertices=8):
    """Balance verdict and cycle rank survive divalent suppression."""
    res = SuiteResult("suppression")
    for i in range(seeds):
        s = _random_signed_multigraph("suppression", i, max_vertices)
        red = suppress_divalent(s).reduced
        before, after = is_balanced(s).balanced, is_balanced(red).balanced
        r0, r1 = s.graph.cycle_rank(), red.graph.cycle_rank()
        res.record(
            before == after and r0 == r1,
            i,
            f"balanced {before}->{after} cycle-rank {r0}->{r1}",
            s,
        )
    return res


def _plan_a_base(i: int) -> Graph:
    rng = _rng("plan-a", i)
    if rng.random() < 0.5:
        return random_sparse_graph(rng, 10, 4)
    return random_multigraph(rng, 8, 10)


def construction_soundness_suite(seeds=1000):
    """Outputs of Constructions A, B and C pass the local property."""
    res = SuiteResult("construction-soundness")
    for i in range(seeds):
        p = sample_plan_a(_plan_a_base(i), i)
        s = apply_plan_a(p)
        res.record(property3_local(s).ok, f"a{i}", "plan a output fails", s, serialize_plan(p))
    for i in range(seeds):
        p = sample_plan_b(i)
        s = apply_plan_b(p)
        res.record(property3_local(s).ok, f"b{i}", "plan b output fails", s, serialize_plan(p))
    for i in range(seeds):
        p = sample_plan_c(i)
        s, _ = apply_plan_c(p)
        res.record(property3_local(s).ok, f"c{i}", "plan c output fails", s, serialize_plan(p))
    return res


def round_trip_suite(seeds=5000, plans=1000, max_vertices=8, max_edges=14):
    """Recovery on every locally good graph of the characterization stream,
    and exact plan recovery for sampled plans."""
    res = SuiteResult("round-trip")
    for i in range(seeds):
        s = characterization_stream(i, max_vertices, max_edges)
        if not property3_local(s).ok:
            res.skipped += 1
            continue
        try:
            good = round_trip_check(s)
        except SglineError as err:
            good = False
            res.record(False, f"s{i}", f"{type(err).__name__}: {err}", s)
            continue
        res.record(good, f"s{i}", "round trip differs", s)
    for i in range(plans):
        p = sample_plan_b(i)
        try:
            back = recover_plan(apply_plan_b(p))
        except SglineError as err:
            res.record(False, f"p{i}", f"{type(err).__name__}: {err}", None, serialize_plan(p))
            continue
        res.record(back == p, f"p{i}", "recovered plan differs", None, serialize_plan(p))
    return res


def construction_d_suite(seeds=1000, cap=DEFAULT_CAP):
    """Construction D outputs are balanced, locally good, and line consistent
    by the oracle whenever simple."""
    res = SuiteResult("construction-d")
    for i in range(seeds):
        p = sample_plan_d(i)
        s = apply_plan_d(p)
        bal = is_balanced(s).balanced
        loc = property3_local(s).ok
        oracle = None
        if s.is_simple():
            try:
                oracle = is_line_consistent_oracle(s, cap)
            except CircleCapExceeded:
                oracle = False
        good = bal and loc and oracle is not False
        res.record(good, i, f"balanced {bal} local {loc} oracle {oracle}", s, serialize_plan(p))
    return res


def corollary_suite(seeds=2000, max_vertices=8):
    """Degree-two test for 2-connected graphs against the full decision."""
    res = SuiteResult("two-connected")
    for i in range(seeds):
        rng = _rng("two-connected", i)
        g = random_two_connected_graph(rng, max_vertices)
        s = random_signing(rng, g, NEGATIVE_PROBS[i % 3])
        cor = corollary2_check(s)
        full = _fast_verdict(s)
        res.record(cor == full, i, f"corollary {cor} full {full}", s)
    return res


FIXTURES = {
    "square-adjacent-negatives": SignedGraph.from_edges(4, [(0, 1, -1), (1, 2, -1), (2, 3, 1), (3, 0, 1)]),
    "path-alternating": SignedGraph.from_edges(4, [(0, 1, -1), (1, 2, 1), (2, 3, -1)]),
    "triangle-positive": SignedGraph.from_edges(3, [(0, 1, 1), (1, 2, 1), (2, 0, 1)]),
    "claw-two-negative": SignedGraph.from_edges(4, [(0, 1, -1), (0, 2, -1), (0, 3, 1)]),
    "pendant-square": SignedGraph.from_edges(
        5, [(0, 1, -1), (1, 2, -1), (2, 3, 1), (3, 0, 1), (3, 4, 1)]
    ),
}


def _mutant(s: SignedGraph) -> SignedGraph:
    """Negate the sign of the smallest edge."""
    e = s.graph.edge_ids[0]
    return s.with_signs({e: -s.sign[e]})


def fixture_suite(mutate=False, cap=DEFAULT_CAP):
    """Known line-consistent fixtures, checked by both procedures.

    With ``mutate`` the fast procedure is handed a copy with one sign negated
    while the oracle still sees the original; a working harness must then
    report disagreements.
    """
    res = SuiteResult("fixtures-mutated" if mutate else "fixtures")
    for name, s in FIXTURES.items():
        oracle = is_line_consistent_oracle(s, cap)
        fast = _fast_verdict(_mutant(s) if mutate else s)
        res.record(oracle and fast == oracle, name, f"fast {fast} oracle {oracle}", s)
    return res


@dataclass(frozen=True)
class SuiteSpec:
    name: str
    run: Callable


def default_suites(seeds=None, max_vertices=None, cap=DEFAULT_CAP):
    """The full acceptance battery.  ``seeds`` scales every randomized suite
    to that many instances (and the exhaustive one to twelve times that);
    ``max_vertices`` bounds the random graphs."""

    def k(full):
        return full if seeds is None else seeds

    v = max_vertices or 8
    return [
        SuiteSpec("characterization", lambda: characterization_suite(k(5000), v, 14, cap)),
        SuiteSpec(
            "local-property-exhaustive",
            lambda: local_property_exhaustive_suite(min(v, 5), cap, EXHAUSTIVE_LIMIT if seeds is None else 12 * seeds),
        ),
        SuiteSpec("local-property-multigraph", lambda: local_property_random_suite(k(5000), v, cap)),
        SuiteSpec("balance", lambda: balance_suite(k(5000), v, cap)),
        SuiteSpec("suppression", lambda: suppression_suite(k(5000), v)),
        SuiteSpec("construction-soundness", lambda: construction_soundness_suite(k(1000))),
        SuiteSpec("round-trip", lambda: round_trip_suite(k(5000), k(1000), v, 14)),
        SuiteSpec("construction-d", lambda: construction_d_suite(k(1000), cap)),
        SuiteSpec("two-connected", lambda: corollary_suite(k(2000), max(v, 3))),
        SuiteSpec("fixtures", lambda: fixture_suite(False, cap)),
    ]


def run_suites(specs) -> list:
    return [spec.run() for spec in specs]


def combined_report(results) -> str:
    body = "".join(r.report() + "\n" for r in results)
    total_failed = sum(r.failed for r in results)
    verdict = "pass" if all(r.ok for r in results) else "FAIL"
    return body + f"suites: {len(results)}\nfailed-instances: {total_failed}\noverall: {verdict}\n"


def dump_counterexamples(results, directory) -> list:
    """Write every counterexample as ``<suite>-<seed>.sg`` (and ``.plan``)
    with a ``.txt`` report; returns the written paths."""
    from pathlib import Path

    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for r in results:
        for c in r.counterexamples:
            stem = out / f"{r.name}-{c.seed}"
            report = f"suite: {r.name}\nseed: {c.seed}\ndetail: {c.detail}\n"
            if c.graph is not None:
                path = stem.with_suffix(".sg")
                path.write_text(serialize_signed_graph(c.graph))
                written.append(path)
                if c.graph.is_simple():
                    rep = is_line_consistent(c.graph)
                    report += f"balanced: {'yes' if rep.balanced else 'no'}\n"
                    report += "".join(f"{v}\n" for v in rep.violations)
            if c.plan_text is not None:
                path = stem.with_suffix(".plan")
                path.write_text(c.plan_text)
                written.append(path)
            path = stem.with_suffix(".txt")
            path.write_text(report)
            written.append(path)
    return written
