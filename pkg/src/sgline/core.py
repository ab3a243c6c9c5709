"""Graphs, signed graphs and vertex-signed graphs, plus their text formats.

Graphs are multigraphs on the dense vertex set ``0..n-1``.  Every edge carries
an explicit integer id so that parallel edges can be told apart; loops are
edges whose two endpoints coincide and contribute 2 to the degree.

The ``sg`` text format::

    # comment
    vertices 3
    edge 0 0 1 +
    edge 1 1 2 -

The vertex-signed format replaces edge signs by one ``vsign <v> <+|->`` line
per vertex and writes edges as ``edge <id> <u> <v>``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from math import prod
from types import MappingProxyType
from typing import Iterable, Mapping

from .exceptions import InvalidPath, ParseError, UnknownEdge

OPEN, CLOSED, CIRCLE = "open", "closed", "circle"
PATH_KINDS = (OPEN, CLOSED, CIRCLE)

_SIGN_CHARS = {"+": 1, "-": -1}


def sign_char(s: int) -> str:
    return "+" if s > 0 else "-"


def parse_sign(token: str, line=None) -> int:
    try:
        return _SIGN_CHARS[token]
    except KeyError:
        raise ParseError(f"bad sign {token!r}", line) from None


@dataclass(frozen=True)
class Graph:
    """Undirected multigraph with identified edges ``(edge_id, u, v)``."""

    n_vertices: int
    edges: tuple = ()

    def __post_init__(self):
        edges = tuple(sorted((int(e), int(u), int(v)) for e, u, v in self.edges))
        object.__setattr__(self, "edges", edges)
        if self.n_vertices < 0:
            raise ValueError("negative vertex count")
        seen = set()
        for e, u, v in edges:
            if e in seen:
                raise ValueError(f"duplicate edge id {e}")
            seen.add(e)
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise ValueError(f"edge {e} has an endpoint out of range")

    @cached_property
    def endpoints(self) -> Mapping[int, tuple]:
        return MappingProxyType({e: (u, v) for e, u, v in self.edges})

    @cached_property
    def incidence(self) -> tuple:
        """Per vertex, the sorted tuple of incident edge ids (a loop is listed once)."""
        inc = [[] for _ in range(self.n_vertices)]
        for e, u, v in self.edges:
            inc[u].append(e)
            if v != u:
                inc[v].append(e)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def degrees(self) -> tuple:
        deg = [0] * self.n_vertices
        for _, u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    @property
    def edge_ids(self) -> list:
        return [e for e, _, _ in self.edges]

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def ends(self, e: int) -> tuple:
        try:
            return self.endpoints[e]
        except KeyError:
            raise UnknownEdge(e) from None

    def other_end(self, e: int, v: int) -> int:
        a, b = self.ends(e)
        if a == v:
            return b
        if b == v:
            return a
        raise InvalidPath(f"edge {e} is not incident with vertex {v}")

    def is_loop(self, e: int) -> bool:
        a, b = self.ends(e)
        return a == b

    def is_simple(self) -> bool:
        pairs = set()
        for _, u, v in self.edges:
            if u == v:
                return False
            key = (min(u, v), max(u, v))
            if key in pairs:
                return False
            pairs.add(key)
        return True

    def n_components(self) -> int:
        parent = list(range(self.n_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        count = self.n_vertices
        for _, u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                count -= 1
        return count

    def cycle_rank(self) -> int:
        return self.n_edges - self.n_vertices + self.n_components()

    def subgraph(self, edge_ids: Iterable[int]) -> "Graph":
        """Spanning subgraph on the same vertex set with the given edges."""
        keep = set(edge_ids)
        return Graph(self.n_vertices, [t for t in self.edges if t[0] in keep])


@dataclass(frozen=True)
class SignedGraph:
    """A graph with a sign (+1 or -1) on every edge."""

    graph: Graph
    sign: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        sign = {int(e): int(s) for e, s in dict(self.sign).items()}
        ids = set(self.graph.endpoints)
        if set(sign) != ids:
            missing = ids - set(sign)
            if missing:
                raise ValueError(f"no sign for edges {sorted(missing)}")
            raise ValueError(f"signs given for unknown edges {sorted(set(sign) - ids)}")
        if any(s not in (1, -1) for s in sign.values()):
            raise ValueError("signs must be +1 or -1")
        object.__setattr__(self, "sign", MappingProxyType(dict(sorted(sign.items()))))

    def __eq__(self, other):
        if not isinstance(other, SignedGraph):
            return NotImplemented
        return self.graph == other.graph and dict(self.sign) == dict(other.sign)

    def __hash__(self):
        return hash((self.graph, tuple(self.sign.items())))

    @classmethod
    def from_edges(cls, n_vertices: int, signed_edges) -> "SignedGraph":
        """Build from ``(u, v, sign)`` triples; edge ids are assigned 0, 1, ..."""
        edges = []
        sign = {}
        for e, (u, v, s) in enumerate(signed_edges):
            edges.append((e, u, v))
            sign[e] = s
        return cls(Graph(n_vertices, edges), sign)

    @property
    def n_vertices(self) -> int:
        return self.graph.n_vertices

    @property
    def edges(self) -> tuple:
        return self.graph.edges

    @cached_property
    def negative_edges(self) -> frozenset:
        return frozenset(e for e, s in self.sign.items() if s < 0)

    @cached_property
    def negative_degrees(self) -> tuple:
        deg = [0] * self.n_vertices
        for e, u, v in self.graph.edges:
            if self.sign[e] < 0:
                deg[u] += 1
                deg[v] += 1
        return tuple(deg)

    def degree(self, v: int) -> int:
        return self.graph.degrees[v]

    def negative_degree(self, v: int) -> int:
        return self.negative_degrees[v]

    def is_simple(self) -> bool:
        return self.graph.is_simple()

    def with_signs(self, changes: Mapping[int, int]) -> "SignedGraph":
        sign = dict(self.sign)
        sign.update(changes)
        return SignedGraph(self.graph, sign)


@dataclass(frozen=True)
class VertexSignedGraph:
    """A graph with a sign on every vertex (a marked graph)."""

    graph: Graph
    vsign: tuple = ()

    def __post_init__(self):
        vsign = tuple(int(s) for s in self.vsign)
        if len(vsign) != self.graph.n_vertices:
            raise ValueError("vertex signs must cover every vertex")
        if any(s not in (1, -1) for s in vsign):
            raise ValueError("signs must be +1 or -1")
        object.__setattr__(self, "vsign", vsign)


@dataclass(frozen=True)
class PathElement:
    """An open path, closed path, or circle given by its edge sequence.

    ``termini`` is ``(a, b)`` for an open path, ``(t, t)`` for a closed path
    and ``()`` for a circle.
    """

    kind: str
    edge_seq: tuple
    termini: tuple = ()

    def __post_init__(self):
        if self.kind not in PATH_KINDS:
            raise ValueError(f"unknown path kind {self.kind!r}")
        object.__setattr__(self, "edge_seq", tuple(int(e) for e in self.edge_seq))
        termini = tuple(int(t) for t in self.termini)
        if self.kind == CLOSED and len(termini) == 1:
            termini = (termini[0], termini[0])
        object.__setattr__(self, "termini", termini)
        if not self.edge_seq:
            raise ValueError("paths and circles must have positive length")
        if len(set(self.edge_seq)) != len(self.edge_seq):
            raise ValueError("repeated edge in path element")
        if self.kind == CIRCLE and termini:
            raise ValueError("a circle has no terminus")
        if self.kind != CIRCLE and len(termini) != 2:
            raise ValueError(f"{self.kind} path needs two termini")
        if self.kind == CLOSED and termini[0] != termini[1]:
            raise ValueError("closed path termini must coincide")
        if self.kind == OPEN and termini[0] == termini[1]:
            raise ValueError("open path termini must differ")

    def __len__(self):
        return len(self.edge_seq)

    @property
    def edge_set(self) -> frozenset:
        return frozenset(self.edge_seq)

    def canonical(self) -> "PathElement":
        """Same element with a fixed starting point and direction."""
        seq = self.edge_seq
        if self.kind == CIRCLE:
            i = seq.index(min(seq))
            rot = seq[i:] + seq[:i]
            if len(rot) > 2 and rot[-1] < rot[1]:
                rot = (rot[0],) + tuple(reversed(rot[1:]))
            return PathElement(CIRCLE, rot)
        if len(seq) == 1:
            if self.kind == OPEN:
                return PathElement(OPEN, seq, tuple(sorted(self.termini)))
            return self
        if seq[0] > seq[-1]:
            return PathElement(self.kind, tuple(reversed(seq)), tuple(reversed(self.termini)))
        return self


def path_vertices(g: Graph, p: PathElement) -> list:
    """Vertex sequence ``v0, v1, ..., vk`` traversed by ``p`` in ``g``.

    For closed paths and circles ``vk == v0``.  Raises InvalidPath unless
    ``p`` is a genuine path (no repeated internal vertex) or circle.
    """
    for e in p.edge_seq:
        g.ends(e)
    if p.kind == CIRCLE:
        starts = dict.fromkeys(g.ends(p.edge_seq[0]))
        last_err = None
        for start in starts:
            try:
                return _walk(g, p.edge_seq, start, start)
            except InvalidPath as err:
                last_err = err
        raise last_err
    return _walk(g, p.edge_seq, p.termini[0], p.termini[1])


def _walk(g, seq, start, end):
    verts = [start]
    cur = start
    for e in seq:
        cur = g.other_end(e, cur)
        verts.append(cur)
    if cur != end:
        raise InvalidPath(f"walk ends at {cur}, expected {end}")
    closed = start == end
    inner = verts[1:-1] if closed else verts
    if len(set(inner)) != len(inner) or (closed and start in inner):
        raise InvalidPath("path revisits a vertex")
    return verts


def negative_subgraph(s: SignedGraph) -> Graph:
    return s.graph.subgraph(s.negative_edges)


def path_sign(s: SignedGraph, p) -> int:
    """Product of edge signs along a PathElement (or any iterable of edge ids)."""
    seq = p.edge_seq if isinstance(p, PathElement) else p
    try:
        return prod(s.sign[e] for e in seq)
    except KeyError as err:
        raise UnknownEdge(err.args[0]) from None


# --- text formats -----------------------------------------------------------


def _content_lines(text):
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    for lineno, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, stripped.split()


def _parse_int(tok, lineno, what):
    try:
        return int(tok, 10)
    except ValueError:
        raise ParseError(f"bad {what} {tok!r}", lineno) from None


def _parse_header(tokens, lineno):
    if len(tokens) != 2 or tokens[0] != "vertices":
        raise ParseError("expected 'vertices <n>'", lineno)
    n = _parse_int(tokens[1], lineno, "vertex count")
    if n < 0:
        raise ParseError("negative vertex count", lineno)
    return n


def _parse_edge(tokens, lineno, n, seen, signed):
    want = 5 if signed else 4
    if len(tokens) != want or tokens[0] != "edge":
        if signed and len(tokens) == 4 and tokens[0] == "edge":
            raise ParseError("missing edge sign", lineno)
        raise ParseError("expected 'edge <id> <u> <v>" + (" <+|->'" if signed else "'"), lineno)
    e = _parse_int(tokens[1], lineno, "edge id")
    u = _parse_int(tokens[2], lineno, "vertex")
    v = _parse_int(tokens[3], lineno, "vertex")
    if e in seen:
        raise ParseError(f"duplicate edge id {e}", lineno)
    for x in (u, v):
        if not 0 <= x < n:
            raise ParseError(f"vertex {x} out of range", lineno)
    seen.add(e)
    sign = parse_sign(tokens[4], lineno) if signed else None
    return e, u, v, sign


def parse_signed_graph(text) -> SignedGraph:
    """Parse sg text (str or bytes)."""
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty input", 1)
    lineno, tokens = lines[0]
    n = _parse_header(tokens, lineno)
    edges, sign, seen = [], {}, set()
    for lineno, tokens in lines[1:]:
        e, u, v, s = _parse_edge(tokens, lineno, n, seen, signed=True)
        edges.append((e, u, v))
        sign[e] = s
    return SignedGraph(Graph(n, edges), sign)


def serialize_signed_graph(s: SignedGraph) -> str:
    out = [f"vertices {s.n_vertices}"]
    for e, u, v in s.edges:
        out.append(f"edge {e} {u} {v} {sign_char(s.sign[e])}")
    return "\n".join(out) + "\n"


def parse_vertex_signed_graph(text) -> VertexSignedGraph:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty input", 1)
    lineno, tokens = lines[0]
    n = _parse_header(tokens, lineno)
    vsign = {}
    edges, seen = [], set()
    for lineno, tokens in lines[1:]:
        if tokens[0] == "vsign":
            if len(tokens) != 3:
                raise ParseError("expected 'vsign <v> <+|->'", lineno)
            v = _parse_int(tokens[1], lineno, "vertex")
            if not 0 <= v < n:
                raise ParseError(f"vertex {v} out of range", lineno)
            if v in vsign:
                raise ParseError(f"duplicate vsign for vertex {v}", lineno)
            vsign[v] = parse_sign(tokens[2], lineno)
        else:
            e, u, v, _ = _parse_edge(tokens, lineno, n, seen, signed=False)
            edges.append((e, u, v))
    missing = [v for v in range(n) if v not in vsign]
    if missing:
        raise ParseError(f"missing vsign for vertices {missing}", lines[-1][0])
    return VertexSignedGraph(Graph(n, edges), tuple(vsign[v] for v in range(n)))


def serialize_vertex_signed_graph(vg: VertexSignedGraph) -> str:
    out = [f"vertices {vg.graph.n_vertices}"]
    out += [f"vsign {v} {sign_char(s)}" for v, s in enumerate(vg.vsign)]
    out += [f"edge {e} {u} {v}" for e, u, v in vg.graph.edges]
    return "\n".join(out) + "\n"


def incident_pairs(g: Graph):
    """Map vertex -> list of (edge, other endpoint); loops appear twice."""
    out = defaultdict(list)
    for e, u, v in g.edges:
        out[u].append((e, v))
        out[v].append((e, u))
    return out
