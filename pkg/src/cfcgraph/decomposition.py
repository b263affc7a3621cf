"""Structural analysis: cut edges, blocks, block-cut tree, the bridge-induced
subgraph with its linear-forest classification, and the per-block matching
selection used by the two-coloring construction.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple

from .errors import NotConnectedError, TrivialGraphError
from .graph import Edge, Graph, canonical_edge, is_connected


@dataclass(frozen=True)
class Block:
    """One block: its edges (canonical, sorted) and induced vertex set."""

    edges: Tuple[Edge, ...]
    vertices: Tuple[int, ...]

    @property
    def is_trivial(self) -> bool:
        return len(self.edges) == 1


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: Tuple[Block, ...]
    cut_vertices: FrozenSet[int]
    cut_edges: FrozenSet[Edge]
    # Bipartite tree edges (block_index, cut_vertex).
    tree_edges: Tuple[Tuple[int, int], ...]

    def blocks_containing(self, v: int) -> List[int]:
        return [i for i, b in enumerate(self.blocks) if v in b.vertices]


@dataclass(frozen=True)
class BridgeComponent:
    """One connected component of the bridge-induced subgraph.

    ``path_sequence`` is the vertex order along the component when it is a
    path, starting from its lowest-index degree-1 endpoint; None otherwise.
    """

    vertices: Tuple[int, ...]
    edges: Tuple[Edge, ...]
    path_sequence: Optional[Tuple[int, ...]]

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def is_path(self) -> bool:
        return self.path_sequence is not None


@dataclass(frozen=True)
class CutEdgeProfile:
    cut_edges: FrozenSet[Edge]
    components: Tuple[BridgeComponent, ...]
    is_linear_forest: bool
    component_orders: Tuple[int, ...]
    max_component_edges: int

    @property
    def component_count(self) -> int:
        return len(self.components)

    @property
    def largest(self) -> Optional[BridgeComponent]:
        return self.components[-1] if self.components else None


@dataclass(frozen=True)
class BlockMatching:
    chosen_edges: Tuple[Edge, ...]


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise NotConnectedError("operation requires a connected graph")


def _biconnected(g: Graph) -> Tuple[List[List[Edge]], set]:
    """Iterative lowpoint DFS: returns (blocks as edge lists, cut vertices).

    Assumes g is connected with at least one edge.
    """
    n = g.vertex_count
    disc = [-1] * n
    low = [0] * n
    blocks: List[List[Edge]] = []
    cut = set()
    edge_stack: List[Edge] = []

    root = 0
    counter = 0
    disc[root] = low[root] = counter
    counter += 1
    frames = [[root, -1, iter(g.adjacency[root])]]
    root_children = 0

    while frames:
        u, pu, it = frames[-1]
        pushed = False
        for v in it:
            if v == pu:
                continue
            if disc[v] == -1:
                edge_stack.append(canonical_edge(u, v))
                disc[v] = low[v] = counter
                counter += 1
                frames.append([v, u, iter(g.adjacency[v])])
                if u == root:
                    root_children += 1
                pushed = True
                break
            if disc[v] < disc[u]:
                edge_stack.append(canonical_edge(u, v))
                if disc[v] < low[u]:
                    low[u] = disc[v]
        if pushed:
            continue
        frames.pop()
        if frames:
            p = frames[-1][0]
            if low[u] < low[p]:
                low[p] = low[u]
            if low[u] >= disc[p]:
                if p != root:
                    cut.add(p)
                marker = canonical_edge(p, u)
                block: List[Edge] = []
                while True:
                    e = edge_stack.pop()
                    block.append(e)
                    if e == marker:
                        break
                blocks.append(block)
    if root_children >= 2:
        cut.add(root)
    return blocks, cut


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Blocks, cut vertices, cut edges, and block-cut tree of a connected graph."""
    if g.vertex_count <= 1:
        raise TrivialGraphError("block decomposition needs at least two vertices")
    _require_connected(g)
    raw_blocks, cut = _biconnected(g)
    blocks = []
    for edge_list in raw_blocks:
        edges = tuple(sorted(set(edge_list)))
        vertices = tuple(sorted({x for e in edges for x in e}))
        blocks.append(Block(edges=edges, vertices=vertices))
    blocks.sort(key=lambda b: b.edges)
    cut_edges = frozenset(b.edges[0] for b in blocks if b.is_trivial)
    tree_edges = tuple(
        (i, v) for i, b in enumerate(blocks) for v in b.vertices if v in cut
    )
    return BlockDecomposition(
        blocks=tuple(blocks),
        cut_vertices=frozenset(cut),
        cut_edges=cut_edges,
        tree_edges=tree_edges,
    )


def find_cut_edges(g: Graph) -> FrozenSet[Edge]:
    """All bridges of a connected graph."""
    _require_connected(g)
    if g.vertex_count <= 1 or g.edge_count == 0:
        return frozenset()
    raw_blocks, _ = _biconnected(g)
    return frozenset(b[0] for b in raw_blocks if len(b) == 1)


def count_cut_edges(g: Graph) -> int:
    return len(find_cut_edges(g))


def cut_edge_profile(g: Graph) -> CutEdgeProfile:
    """The subgraph induced by cut edges, with per-component path orientation.

    All bridge components are acyclic, so the linear-forest test reduces to
    max degree <= 2 within the bridge subgraph.
    """
    bridges = find_cut_edges(g)
    adj: Dict[int, List[int]] = {}
    for u, v in bridges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    for v in adj:
        adj[v].sort()

    seen = set()
    components = []
    for start in sorted(adj):
        if start in seen:
            continue
        comp = []
        stack = [start]
        seen.add(start)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comp_vertices = tuple(sorted(comp))
        comp_edges = tuple(
            sorted(e for e in bridges if e[0] in comp and e[1] in comp)
        )
        is_path = all(len(adj[v]) <= 2 for v in comp_vertices)
        path_sequence = None
        if is_path:
            endpoints = [v for v in comp_vertices if len(adj[v]) == 1]
            cur = min(endpoints)
            prev = None
            seq = [cur]
            while len(seq) < len(comp_vertices):
                nxt = [w for w in adj[cur] if w != prev][0]
                seq.append(nxt)
                prev, cur = cur, nxt
            path_sequence = tuple(seq)
        components.append(
            BridgeComponent(
                vertices=comp_vertices, edges=comp_edges, path_sequence=path_sequence
            )
        )
    components.sort(key=lambda c: (c.order, c.vertices))
    return CutEdgeProfile(
        cut_edges=bridges,
        components=tuple(components),
        is_linear_forest=all(c.is_path for c in components),
        component_orders=tuple(c.order for c in components),
        max_component_edges=max((len(c.edges) for c in components), default=0),
    )


def select_block_matching(d: BlockDecomposition) -> BlockMatching:
    """Choose one edge per nontrivial block so the choices form a matching.

    The block-cut tree is rooted at the lowest-index cut vertex (or at the
    unique block when there is none); each nontrivial block avoids the cut
    vertex on its path toward the root.  A 2-connected block minus one vertex
    still contains an edge, and for any cut vertex at most one incident block
    (the root-side one) may pick an edge touching it, so the result is a
    matching.  Lowest canonical-order choice keeps the output deterministic.
    """
    nontrivial = [i for i, b in enumerate(d.blocks) if not b.is_trivial]
    if not nontrivial:
        return BlockMatching(chosen_edges=())

    # Attachment vertex per block: the cut vertex adjacent to the block on
    # the path toward the root of the block-cut tree.
    attachment: Dict[int, Optional[int]] = {}
    if not d.cut_vertices:
        attachment[0] = None
    else:
        root = ("cut", min(d.cut_vertices))
        block_cuts: Dict[int, List[int]] = {}
        cut_blocks: Dict[int, List[int]] = {}
        for bi, v in d.tree_edges:
            block_cuts.setdefault(bi, []).append(v)
            cut_blocks.setdefault(v, []).append(bi)
        visited = {root}
        frontier = [root]
        for bi in range(len(d.blocks)):
            attachment[bi] = None
        while frontier:
            node = frontier.pop()
            kind, x = node
            if kind == "cut":
                for bi in cut_blocks.get(x, []):
                    child = ("block", bi)
                    if child not in visited:
                        visited.add(child)
                        attachment[bi] = x
                        frontier.append(child)
            else:
                for v in block_cuts.get(x, []):
                    child = ("cut", v)
                    if child not in visited:
                        visited.add(child)
                        frontier.append(child)

    chosen = []
    for bi in nontrivial:
        block = d.blocks[bi]
        avoid = attachment.get(bi)
        edge = min(e for e in block.edges if avoid not in e)
        chosen.append(edge)
    chosen.sort()
    # Matching property is guaranteed by construction; check defensively.
    used = set()
    for u, v in chosen:
        assert u not in used and v not in used, "chosen edges are not a matching"
        used.update((u, v))
    return BlockMatching(chosen_edges=tuple(chosen))
