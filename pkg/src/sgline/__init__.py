"""Line consistency of signed graphs: fast characterization, constructions,
plan recovery, and brute-force cross-checks."""

from .balance import (
    BalanceReport,
    balanced_per_block_after_suppression,
    is_balanced,
    is_balanced_cut,
    is_balanced_switching,
)
from .core import (
    CIRCLE,
    CLOSED,
    OPEN,
    Graph,
    PathElement,
    SignedGraph,
    VertexSignedGraph,
    negative_subgraph,
    parse_signed_graph,
    parse_vertex_signed_graph,
    path_sign,
    path_vertices,
    serialize_signed_graph,
    serialize_vertex_signed_graph,
)
from .exceptions import (
    CircleCapExceeded,
    InternalInconsistency,
    InvalidCut,
    InvalidPlan,
    Not2Connected,
    NotSimple,
    ParseError,
    PropertyViolated,
    RetryBudgetExhausted,
)
from .linegraph import is_consistent_bruteforce, is_line_consistent_oracle, line_graph
from .properties import corollary2_check, is_line_consistent, property2_literal, property3_local
from .recovery import recover_plan, round_trip_check
from .structure import blocks, enumerate_circles, isthmi, megablocks, suppress_divalent

__version__ = "0.1.0"
