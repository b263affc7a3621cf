"""Shared brute-force oracles, kept independent of the library's search code."""
import itertools
from collections import Counter

import cfcgraph as cfc


def bridge_oracle(g):
    """Remove each edge in turn and re-test connectivity."""
    bridges = set()
    for e in g.edges:
        rest = [x for x in g.edges if x != e]
        if not cfc.is_connected(cfc.build_graph(g.vertex_count, rest)):
            bridges.add(e)
    return frozenset(bridges)


def simple_paths_between(g, source, target):
    """Recursive simple-path enumeration (independent of the library's
    iterative search)."""

    def rec(cur, visited, path):
        if cur == target:
            yield tuple(path)
            return
        for w in g.adjacency[cur]:
            if w not in visited:
                visited.add(w)
                path.append(w)
                yield from rec(w, visited, path)
                path.pop()
                visited.remove(w)

    yield from rec(source, {source}, [source])


def coloring_is_conflict_free_connected(g, colors):
    """Independent verdict: every pair joined by a path with a unique color."""
    cmap = dict(zip(g.edges, colors))
    for u in range(g.vertex_count):
        for v in range(u + 1, g.vertex_count):
            ok = False
            for p in simple_paths_between(g, u, v):
                counts = Counter(
                    cmap[cfc.canonical_edge(a, b)] for a, b in zip(p, p[1:])
                )
                if 1 in counts.values():
                    ok = True
                    break
            if not ok:
                return False
    return True


def cfc_brute(g, tmax=None):
    """Smallest palette size by full unrestricted enumeration (no symmetry
    breaking); only for very small graphs."""
    m = g.edge_count
    if tmax is None:
        tmax = m
    for t in range(1, tmax + 1):
        for colors in itertools.product(range(1, t + 1), repeat=m):
            if coloring_is_conflict_free_connected(g, colors):
                return t
    return None


def has_two_coloring_brute(g):
    """Full 2^m sweep, no first-edge fix; cross-check for symmetry soundness."""
    for colors in itertools.product((1, 2), repeat=g.edge_count):
        if coloring_is_conflict_free_connected(g, colors):
            return True
    return False
