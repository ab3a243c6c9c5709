"""Local degree conditions for line consistency and the fast decision procedure.

``property2_literal`` quantifies over circles and exists to cross-check
``property3_local``, which is the linear-time check used everywhere else.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .balance import BalanceReport, is_balanced
from .core import PathElement, SignedGraph
from .exceptions import Not2Connected, NotSimple
from .linegraph import DEFAULT_CAP
from .structure import blocks, enumerate_circles, isthmi

P2A, P2B, P2C, P3, COR2 = "P2a", "P2b", "P2c", "P3", "Cor2"


@dataclass(frozen=True)
class PropertyViolation:
    vertex: int
    clause: str
    degree: int
    negative_degree: int
    circle: Optional[PathElement] = None
    p2_clause: Optional[str] = None

    def __str__(self):
        text = (
            f"violation {self.clause} vertex {self.vertex} "
            f"degree {self.degree} negative-degree {self.negative_degree}"
        )
        if self.p2_clause and self.p2_clause != self.clause:
            text += f" as {self.p2_clause}"
        if self.circle is not None:
            text += " circle " + " ".join(map(str, self.circle.edge_seq))
        return text


class PropertyCheck(NamedTuple):
    ok: bool
    violations: tuple


@dataclass(frozen=True)
class CheckReport:
    balance: BalanceReport
    property_ok: bool
    violations: tuple
    line_consistent: Optional[bool]

    @property
    def balanced(self) -> bool:
        return self.balance.balanced


def _negative_edges_at(s: SignedGraph, v: int) -> frozenset:
    return frozenset(e for e in s.graph.incidence[v] if s.sign[e] < 0)


def property2_literal(s: SignedGraph, cap: int = DEFAULT_CAP, circles=None) -> PropertyCheck:
    """Degree clauses (a), (b) and the circle clause (c), read universally.

    Clause (c): whenever ``d-(v) = 2``, every circle through ``v`` contains
    all negative edges at ``v``.  ``circles`` may be passed in to reuse one
    enumeration across many signings of the same graph.
    """
    g = s.graph
    found = []
    need_c = []
    for v in range(g.n_vertices):
        d, dn = g.degrees[v], s.negative_degrees[v]
        if d > 3 and dn != 0:
            found.append(PropertyViolation(v, P2A, d, dn))
        if d == 3 and dn not in (0, 2):
            found.append(PropertyViolation(v, P2B, d, dn))
        if dn == 2:
            need_c.append(v)
    if need_c:
        if circles is None:
            circles = enumerate_circles(g, cap)
        for v in need_c:
            neg = _negative_edges_at(s, v)
            for c in circles:
                on = any(v in g.ends(e) for e in c.edge_seq)
                if on and not neg <= c.edge_set:
                    found.append(PropertyViolation(v, P2C, g.degrees[v], 2, circle=c))
                    break
    found.sort(key=lambda x: (x.vertex, x.clause))
    return PropertyCheck(not found, tuple(found))


def _p2_clause(d, dn):
    if d > 3:
        return P2A
    if d == 3 and dn != 2:
        return P2B
    return P2C


def property3_local(s: SignedGraph, bridges=None) -> PropertyCheck:
    """Each vertex needs d-(v) = 0, or 1 <= d-(v) <= d(v) <= 2, or
    d-(v) = 2, d(v) = 3 with the positive edge at v an isthmus."""
    g = s.graph
    found = []
    for v in range(g.n_vertices):
        d, dn = g.degrees[v], s.negative_degrees[v]
        if dn == 0 or 1 <= dn <= d <= 2:
            continue
        if dn == 2 and d == 3:
            if bridges is None:
                bridges = isthmi(g)
            positive = [e for e in g.incidence[v] if s.sign[e] > 0]
            if positive[0] in bridges:
                continue
        found.append(PropertyViolation(v, P3, d, dn, p2_clause=_p2_clause(d, dn)))
    return PropertyCheck(not found, tuple(found))


def is_line_consistent(s: SignedGraph, allow_nonsimple: bool = False) -> CheckReport:
    """Balance plus the local property.

    For a non-simple graph the verdict is undefined: raises NotSimple, or with
    ``allow_nonsimple`` returns a report whose ``line_consistent`` is None.
    """
    simple = s.is_simple()
    if not simple and not allow_nonsimple:
        raise NotSimple("line consistency is defined for simple signed graphs")
    balance = is_balanced(s)
    prop = property3_local(s)
    verdict = (balance.balanced and prop.ok) if simple else None
    return CheckReport(balance, prop.ok, prop.violations, verdict)


def is_two_connected(s: SignedGraph) -> bool:
    g = s.graph
    if g.n_vertices < 3:
        return False
    dec = blocks(g)
    return len(dec.blocks) == 1 and dec.blocks[0].nontrivial and len(dec.blocks[0].vertices) == g.n_vertices


def corollary2_check(s: SignedGraph) -> bool:
    """For simple 2-connected graphs: balanced and every endpoint of a
    negative edge has degree at most 2."""
    if not s.is_simple():
        raise NotSimple("corollary applies to simple graphs")
    if not is_two_connected(s):
        raise Not2Connected("graph is not 2-connected")
    g = s.graph
    if not is_balanced(s).balanced:
        return False
    return all(g.degrees[x] <= 2 for e in s.negative_edges for x in g.ends(e))


def recheck_violation(s: SignedGraph, viol: PropertyViolation) -> bool:
    """True iff ``viol`` describes a genuine failure at its vertex."""
    g = s.graph
    v = viol.vertex
    d, dn = g.degrees[v], s.negative_degrees[v]
    if (d, dn) != (viol.degree, viol.negative_degree):
        return False
    if viol.clause == P2A:
        return d > 3 and dn != 0
    if viol.clause == P2B:
        return d == 3 and dn not in (0, 2)
    if viol.clause == P2C:
        c = viol.circle
        return (
            dn == 2
            and c is not None
            and any(v in g.ends(e) for e in c.edge_seq)
            and not _negative_edges_at(s, v) <= c.edge_set
        )
    if viol.clause == P3:
        return any(x.vertex == v for x in property3_local(s).violations)
    return False
