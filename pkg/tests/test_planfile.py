import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sgline import OPEN, Graph, ParseError, PathElement, SignedGraph
from sgline.constructions import (
    PlanB,
    PlanD,
    parse_plan,
    sample_plan_a,
    sample_plan_b,
    sample_plan_c,
    sample_plan_d,
    serialize_plan,
)
from sgline.generators import random_sparse_graph

THETA_TEXT = """\
plan b
base
vertices 2
edge 0 0 1 -
edge 1 0 1 +
edge 2 0 1 +
fprime 0
element open 0 terminus 0 1
subdiv 0 3 +-+
subdiv 1 1 +
subdiv 2 1 +
"""


def test_theta_plan_text():
    p = parse_plan(THETA_TEXT)
    sigma = SignedGraph(Graph(2, [(0, 0, 1), (1, 0, 1), (2, 0, 1)]), {0: -1, 1: 1, 2: 1})
    assert p == PlanB(sigma, frozenset({0}), (PathElement(OPEN, (0,), (0, 1)),), {0: 3}, {0: (1, -1, 1)})
    assert serialize_plan(p) == THETA_TEXT


def test_comments_and_defaults():
    text = "# theta\nplan b\nbase\nvertices 2\nedge 0 0 1 +\nedge 1 0 1 +\nedge 2 0 1 +\n"
    p = parse_plan(text)
    assert p.f_prime == frozenset() and p.lengths == {0: 1, 1: 1, 2: 1}


def test_plan_d_blocks_and_isthmi():
    text = "plan d\nbase\nvertices 3\nedge 0 0 0\nedge 1 0 1\nedge 2 1 1\nedge 3 1 2\nblock 0 allpos\nisthmus 1 -\n"
    p = parse_plan(text)
    assert isinstance(p, PlanD)
    assert p.block_signing == {} and p.isthmus_signs == {1: -1}


@pytest.mark.parametrize(
    "text",
    [
        "base\nvertices 2\n",
        "plan x\n",
        "plan b\nvertices 2\nedge 0 0 1\n",
        "plan a\nvertices 2\nedge 0 0 1\nfprime 0\n",
        "plan b\nvertices 2\nedge 0 0 1 +\nsubdiv 0 2 +\n",
        "plan b\nvertices 2\nedge 0 0 1 +\nelement open 0 terminus 0\n",
        "plan b\nvertices 2\nedge 0 0 1 +\nsubdiv 4 1 +\n",
        "plan d\nvertices 2\nedge 0 0 1\nblock 0 cut\n",
        "plan b\nvertices 2\nedge 0 0 1 +\nfrobnicate\n",
    ],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_plan(text)


@given(st.integers(0, 10**6), st.sampled_from("abcd"))
def test_serialize_parse_round_trip(seed, kind):
    if kind == "a":
        p = sample_plan_a(random_sparse_graph(random.Random(seed), 9, 4), seed)
    else:
        p = {"b": sample_plan_b, "c": sample_plan_c, "d": sample_plan_d}[kind](seed)
    text = serialize_plan(p)
    back = parse_plan(text)
    assert back == p
    assert serialize_plan(back) == text
