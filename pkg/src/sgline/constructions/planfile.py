"""Line-oriented plan files.

Grammar (tokens separated by whitespace, ``#`` starts a comment line)::

    plan <a|b|c|d>
    base
    vertices <n>
    edge <id> <u> <v> [<+|->]          sign present for plan b only
    fprime [<edge id> ...]             plans b, c, d
    element <open|closed|circle> <edge id> ... [terminus <v> [<v>]]
    subdiv <edge id> <length> <signs>  e.g. ``subdiv 3 3 +-+``
    block <index> allpos               plan d; index into the nontrivial blocks
    block <index> cut <v> ...
    isthmus <edge id> <+|->            plan d; sign override for an isthmus

Open paths list both termini, closed paths one, circles none.  Serialisation
writes lines in exactly this order with one ``subdiv`` line per base edge.
"""

from __future__ import annotations

from ..core import CIRCLE, CLOSED, PATH_KINDS, Graph, PathElement, SignedGraph, parse_sign, sign_char
from ..exceptions import ParseError
from .plans import PlanA, PlanB, PlanC, PlanD

_KINDS = {"a": PlanA, "b": PlanB, "c": PlanC, "d": PlanD}


def _ints(tokens, lineno, what="integer"):
    try:
        return [int(t, 10) for t in tokens]
    except ValueError:
        raise ParseError(f"bad {what} in {' '.join(tokens)!r}", lineno) from None


def parse_plan(text):
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    kind = None
    n = None
    edges, signs = [], {}
    f_prime = set()
    elements, lengths, seqs = [], {}, {}
    signing, isthmus_signs = {}, {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        head = tok[0]
        if head == "plan":
            if len(tok) != 2 or tok[1] not in _KINDS:
                raise ParseError("expected 'plan <a|b|c|d>'", lineno)
            kind = tok[1]
        elif kind is None:
            raise ParseError("plan file must start with 'plan <kind>'", lineno)
        elif head == "base":
            if len(tok) != 1:
                raise ParseError("'base' takes no arguments", lineno)
        elif head == "vertices":
            if n is not None or len(tok) != 2:
                raise ParseError("expected a single 'vertices <n>' line", lineno)
            (n,) = _ints(tok[1:], lineno)
        elif head == "edge":
            if n is None:
                raise ParseError("'edge' before 'vertices'", lineno)
            want = 5 if kind == "b" else 4
            if len(tok) != want:
                raise ParseError(f"plan {kind} edges take {want - 1} fields", lineno)
            e, u, v = _ints(tok[1:4], lineno)
            if any(e == x[0] for x in edges):
                raise ParseError(f"duplicate edge id {e}", lineno)
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError("vertex out of range", lineno)
            edges.append((e, u, v))
            if kind == "b":
                signs[e] = parse_sign(tok[4], lineno)
        elif head == "fprime":
            if kind == "a":
                raise ParseError("plan a has no F'", lineno)
            f_prime.update(_ints(tok[1:], lineno, "edge id"))
        elif head == "element":
            if len(tok) < 3 or tok[1] not in PATH_KINDS:
                raise ParseError("expected 'element <open|closed|circle> <edges>'", lineno)
            rest = tok[2:]
            termini = []
            if "terminus" in rest:
                k = rest.index("terminus")
                termini = _ints(rest[k + 1 :], lineno, "vertex")
                rest = rest[:k]
            want = {CIRCLE: 0, CLOSED: 1}.get(tok[1], 2)
            if len(termini) != want:
                raise ParseError(f"{tok[1]} element needs {want} termini", lineno)
            try:
                elements.append(PathElement(tok[1], _ints(rest, lineno, "edge id"), termini))
            except ValueError as err:
                raise ParseError(str(err), lineno) from None
        elif head == "subdiv":
            if kind == "a" or len(tok) != 4:
                raise ParseError("expected 'subdiv <edge> <length> <signs>'", lineno)
            e, length = _ints(tok[1:3], lineno)
            if e in lengths:
                raise ParseError(f"duplicate subdiv for edge {e}", lineno)
            seq = tuple(parse_sign(c, lineno) for c in tok[3])
            if len(seq) != length or length < 1:
                raise ParseError("sign sequence length differs from subdivision length", lineno)
            lengths[e], seqs[e] = length, seq
        elif head == "block":
            if kind != "d" or len(tok) < 3:
                raise ParseError("expected 'block <index> allpos|cut <v>...' in plan d", lineno)
            (i,) = _ints(tok[1:2], lineno)
            if tok[2] == "allpos" and len(tok) == 3:
                signing[i] = None
            elif tok[2] == "cut" and len(tok) > 3:
                signing[i] = frozenset(_ints(tok[3:], lineno, "vertex"))
            else:
                raise ParseError("expected 'allpos' or 'cut <v>...'", lineno)
        elif head == "isthmus":
            if kind != "d" or len(tok) != 3:
                raise ParseError("expected 'isthmus <edge> <+|->' in plan d", lineno)
            (e,) = _ints(tok[1:2], lineno)
            isthmus_signs[e] = parse_sign(tok[2], lineno)
        else:
            raise ParseError(f"unknown keyword {head!r}", lineno)
    if kind is None or n is None:
        raise ParseError("plan needs 'plan <kind>' and a base graph", None)

    g = Graph(n, edges)
    unknown = set(lengths) - set(g.edge_ids)
    if unknown:
        raise ParseError(f"subdiv for unknown edges {sorted(unknown)}", None)
    if kind == "a":
        return PlanA(g, tuple(elements))
    if kind == "b":
        return PlanB(SignedGraph(g, signs), frozenset(f_prime), tuple(elements), lengths, seqs)
    if kind == "c":
        return PlanC(g, frozenset(f_prime), tuple(elements), lengths, seqs)
    return PlanD(g, frozenset(f_prime), tuple(elements), lengths, seqs, signing, isthmus_signs)


def _element_line(el: PathElement) -> str:
    parts = ["element", el.kind, *map(str, el.edge_seq)]
    if el.kind == CLOSED:
        parts += ["terminus", str(el.termini[0])]
    elif el.kind != CIRCLE:
        parts += ["terminus", *map(str, el.termini)]
    return " ".join(parts)


def serialize_plan(p) -> str:
    kind = {PlanA: "a", PlanB: "b", PlanC: "c", PlanD: "d"}[type(p)]
    g = p.base
    out = [f"plan {kind}", "base", f"vertices {g.n_vertices}"]
    for e, u, v in g.edges:
        if kind == "b":
            out.append(f"edge {e} {u} {v} {sign_char(p.base_signed.sign[e])}")
        else:
            out.append(f"edge {e} {u} {v}")
    if kind == "a":
        out += [_element_line(el) for el in p.elements]
        return "\n".join(out) + "\n"
    out.append(" ".join(["fprime", *map(str, sorted(p.f_prime))]))
    out += [_element_line(el) for el in p.d_prime]
    for e in g.edge_ids:
        seq = "".join(sign_char(x) for x in p.sign_seqs[e])
        out.append(f"subdiv {e} {p.lengths[e]} {seq}")
    if kind == "d":
        for i, x in p.block_signing.items():
            out.append(" ".join(["block", str(i), "cut", *map(str, sorted(x))]))
        for e, s in p.isthmus_signs.items():
            out.append(f"isthmus {e} {sign_char(s)}")
    return "\n".join(out) + "\n"
