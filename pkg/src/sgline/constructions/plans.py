"""Plan objects for the four constructions.

Plans are normalised on creation: path elements are put in canonical
orientation and sorted by smallest edge id, and ``lengths``/``sign_seqs``
become total over the base edges (length 1, all positive by default), so two
plans describing the same construction compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional

from ..core import Graph, PathElement, SignedGraph


@dataclass(frozen=True)
class Violation:
    step: str
    message: str
    element: Optional[int] = None
    edge: Optional[int] = None
    vertex: Optional[int] = None

    def __str__(self):
        where = []
        if self.element is not None:
            where.append(f"element {self.element}")
        if self.edge is not None:
            where.append(f"edge {self.edge}")
        if self.vertex is not None:
            where.append(f"vertex {self.vertex}")
        loc = (" " + " ".join(where)) if where else ""
        return f"step {self.step}{loc}: {self.message}"


def _normalise_elements(elements):
    return tuple(sorted((el.canonical() for el in elements), key=lambda el: min(el.edge_seq)))


def _normalise_subdivision(obj, base: Graph):
    lengths = {int(e): int(n) for e, n in dict(obj.lengths).items()}
    seqs = {int(e): tuple(int(x) for x in seq) for e, seq in dict(obj.sign_seqs).items()}
    for e in base.edge_ids:
        if e not in lengths:
            lengths[e] = len(seqs[e]) if e in seqs else 1
        if e not in seqs and lengths[e] >= 1:
            seqs[e] = (1,) * lengths[e]
    object.__setattr__(obj, "lengths", dict(sorted(lengths.items())))
    object.__setattr__(obj, "sign_seqs", dict(sorted(seqs.items())))
    object.__setattr__(obj, "f_prime", frozenset(int(e) for e in obj.f_prime))
    object.__setattr__(obj, "d_prime", _normalise_elements(obj.d_prime))


@dataclass(frozen=True, eq=True)
class PlanA:
    base: Graph
    elements: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "elements", _normalise_elements(self.elements))

    __hash__ = None


@dataclass(frozen=True, eq=True)
class PlanB:
    """Signed base graph, the set F', its partition D', and per-edge subdivisions."""

    base_signed: SignedGraph
    f_prime: frozenset = frozenset()
    d_prime: tuple = ()
    lengths: Mapping[int, int] = field(default_factory=dict)
    sign_seqs: Mapping[int, tuple] = field(default_factory=dict)

    def __post_init__(self):
        _normalise_subdivision(self, self.base_signed.graph)

    __hash__ = None

    @property
    def base(self) -> Graph:
        return self.base_signed.graph


@dataclass(frozen=True, eq=True)
class PlanC:
    """Construction B data without base signs; F' is unconstrained."""

    base: Graph
    f_prime: frozenset = frozenset()
    d_prime: tuple = ()
    lengths: Mapping[int, int] = field(default_factory=dict)
    sign_seqs: Mapping[int, tuple] = field(default_factory=dict)

    def __post_init__(self):
        _normalise_subdivision(self, self.base)

    __hash__ = None


@dataclass(frozen=True, eq=True)
class PlanD:
    """Construction B data whose base signs come from balanced block signings.

    ``block_signing`` maps the index of a nontrivial block (in the order of
    ``blocks(base).nontrivial_blocks``) to a vertex set X whose cut inside
    the block is made negative; absent blocks are all positive.
    ``isthmus_signs`` optionally makes isthmi of the base negative.
    """

    base: Graph
    f_prime: frozenset = frozenset()
    d_prime: tuple = ()
    lengths: Mapping[int, int] = field(default_factory=dict)
    sign_seqs: Mapping[int, tuple] = field(default_factory=dict)
    block_signing: Mapping[int, frozenset] = field(default_factory=dict)
    isthmus_signs: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        _normalise_subdivision(self, self.base)
        signing = {int(i): frozenset(x) for i, x in dict(self.block_signing).items() if x is not None}
        object.__setattr__(self, "block_signing", dict(sorted(signing.items())))
        signs = {int(e): int(s) for e, s in dict(self.isthmus_signs).items() if int(s) < 0}
        object.__setattr__(self, "isthmus_signs", dict(sorted(signs.items())))

    __hash__ = None


def plan_c_from_b(p: PlanB) -> PlanC:
    return PlanC(p.base, p.f_prime, p.d_prime, p.lengths, p.sign_seqs)
