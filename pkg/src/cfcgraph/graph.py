"""Simple undirected graph: construction, basic queries, and edge-list I/O.

Vertices are dense indices 0..n-1.  Edges are stored in canonical form
(min, max) so edge sets and colorings compare exactly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, TextIO, Tuple

from .errors import (
    EdgeListParseError,
    EmptyGraphError,
    InvalidVertexError,
    SelfLoopError,
)

Edge = Tuple[int, int]


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    ``edges`` is a sorted tuple of canonical (min, max) pairs; ``adjacency``
    holds sorted neighbor tuples and is derived, so it is excluded from
    equality and hashing.
    """

    vertex_count: int
    edges: Tuple[Edge, ...]
    adjacency: Tuple[Tuple[int, ...], ...] = field(compare=False, repr=False, default=())
    edge_set: frozenset = field(compare=False, repr=False, default=frozenset())

    def __post_init__(self):
        neighbors = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            neighbors[u].add(v)
            neighbors[v].add(u)
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(s)) for s in neighbors))
        object.__setattr__(self, "edge_set", frozenset(self.edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self.edge_set

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])


@dataclass(frozen=True)
class VertexDegreeView:
    degrees: Tuple[int, ...]
    min_degree: int


def build_graph(vertex_count: int, edge_list: Iterable[Tuple[int, int]]) -> Graph:
    """Build a Graph from an edge list, collapsing duplicates.

    Raises InvalidVertexError for out-of-range endpoints and SelfLoopError
    for loops.
    """
    if vertex_count < 0:
        raise InvalidVertexError(f"vertex_count must be nonnegative, got {vertex_count}")
    edges = set()
    for u, v in edge_list:
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if not (0 <= u < vertex_count) or not (0 <= v < vertex_count):
            raise InvalidVertexError(f"edge ({u}, {v}) has an endpoint outside [0, {vertex_count})")
        edges.add(canonical_edge(u, v))
    return Graph(vertex_count=vertex_count, edges=tuple(sorted(edges)))


def is_connected(g: Graph) -> bool:
    """True iff a traversal from vertex 0 reaches every vertex."""
    if g.vertex_count == 0:
        raise EmptyGraphError("connectivity is undefined for the empty graph")
    seen = [False] * g.vertex_count
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for w in g.adjacency[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == g.vertex_count


def is_complete(g: Graph) -> bool:
    if g.vertex_count == 0:
        raise EmptyGraphError("completeness is undefined for the empty graph")
    n = g.vertex_count
    return g.edge_count == n * (n - 1) // 2


def degree_view(g: Graph) -> VertexDegreeView:
    if g.vertex_count == 0:
        raise EmptyGraphError("degree view is undefined for the empty graph")
    degrees = tuple(len(a) for a in g.adjacency)
    return VertexDegreeView(degrees=degrees, min_degree=min(degrees))


def min_nonadjacent_degree_sum(g: Graph) -> Optional[int]:
    """Minimum of deg(x)+deg(y) over nonadjacent pairs; None for complete graphs."""
    best = None
    deg = [len(a) for a in g.adjacency]
    for u in range(g.vertex_count):
        for v in range(u + 1, g.vertex_count):
            if not g.has_edge(u, v):
                s = deg[u] + deg[v]
                if best is None or s < best:
                    best = s
    return best


def parse_edge_list(text: str) -> Graph:
    """Parse the canonical edge-list format.

    First non-comment line is ``n m``, followed by m lines ``u v`` with
    0-based endpoints.  Lines starting with ``#`` are comments.
    """
    header = None
    edges = []
    expected_m = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise EdgeListParseError("expected header 'n m'", lineno)
            try:
                n, expected_m = int(parts[0]), int(parts[1])
            except ValueError:
                raise EdgeListParseError("header fields must be integers", lineno)
            header = (n, expected_m)
            continue
        if len(parts) != 2:
            raise EdgeListParseError("expected edge line 'u v'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError("edge endpoints must be integers", lineno)
        edges.append((u, v))
    if header is None:
        raise EdgeListParseError("missing header 'n m'", 1)
    if len(edges) != header[1]:
        raise EdgeListParseError(
            f"header declares {header[1]} edges but {len(edges)} were given", 1
        )
    try:
        return build_graph(header[0], edges)
    except (InvalidVertexError, SelfLoopError) as exc:
        raise EdgeListParseError(str(exc), 1)


def read_edge_list(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def format_edge_list(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"{g.vertex_count} {g.edge_count}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def write_edge_list(g: Graph, fh: TextIO, comments: Iterable[str] = ()) -> None:
    fh.write(format_edge_list(g, comments))
