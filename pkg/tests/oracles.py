"""Independent oracles for cross-checking package results.

Each oracle reimplements a result from scratch with a different algorithm
(or delegates to networkx/numpy), touching only Graph's public data. Tests
freeze oracle outputs as expected values; nothing here imports package
internals beyond the Graph container.
"""

from __future__ import annotations

from itertools import combinations

import networkx as nx
import numpy as np


def to_networkx(g) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    for v in range(g.n):
        for w in g.adj[v]:
            if v < w:
                h.add_edge(v, w)
    return h


def nx_isomorphic(g1, g2) -> bool:
    return nx.is_isomorphic(to_networkx(g1), to_networkx(g2))


def nx_graph6(g) -> str:
    return nx.to_graph6_bytes(to_networkx(g), header=False).decode().strip()


def eig_radius(g) -> float:
    """Largest adjacency eigenvalue via dense symmetric eigensolver."""
    a = np.zeros((g.n, g.n))
    for v in range(g.n):
        for w in g.adj[v]:
            a[v, w] = 1.0
    return float(np.linalg.eigvalsh(a)[-1]) if g.n else 0.0


def char_poly_coeffs(g) -> list[int]:
    """Ascending integer coefficients of det(xI - A), via numpy + rounding.

    Safe for n <= 12 or so where coefficients stay far below float precision.
    """
    a = np.zeros((g.n, g.n))
    for v in range(g.n):
        for w in g.adj[v]:
            a[v, w] = 1.0
    return [round(c) for c in np.poly(a)[::-1]] if g.n else [1]


def brute_gamma(g) -> int:
    """Smallest dominating set size by subset search."""
    closed = [frozenset(g.adj[v]) | {v} for v in range(g.n)]
    full = frozenset(range(g.n))
    for size in range(1, g.n + 1):
        for subset in combinations(range(g.n), size):
            cover = frozenset()
            for v in subset:
                cover |= closed[v]
            if cover == full:
                return size
    return g.n


def brute_min_dominating_sets(g) -> set[frozenset]:
    """Every minimum dominating set, by subset search."""
    closed = [frozenset(g.adj[v]) | {v} for v in range(g.n)]
    full = frozenset(range(g.n))
    for size in range(1, g.n + 1):
        found = {
            frozenset(subset)
            for subset in combinations(range(g.n), size)
            if frozenset().union(*(closed[v] for v in subset)) == full
        }
        if found:
            return found
    return {frozenset()}


def ahu_code(n: int, edges: list[tuple[int, int]]) -> tuple:
    """Canonical form of a free tree: AHU code rooted at the centroid(s)."""
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)

    def centroids() -> list[int]:
        degree = [len(a) for a in adj]
        level = [v for v in range(n) if degree[v] <= 1]
        removed = 0
        while n - removed > 2:
            removed += len(level)
            nxt = []
            for v in level:
                for w in adj[v]:
                    degree[w] -= 1
                    if degree[w] == 1:
                        nxt.append(w)
            level = nxt
        return level if n > 1 else [0]

    def code(v: int, parent: int) -> tuple:
        return tuple(sorted(code(w, v) for w in adj[v] if w != parent))

    return min(code(c, -1) for c in centroids())


def prufer_decode(seq: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    used = [False] * n
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1 and not used[v])
        edges.append((leaf, x))
        used[leaf] = True
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (w for w in range(n) if degree[w] == 1 and not used[w])
    edges.append((u, v))
    return edges


def prufer_free_tree_count(n: int) -> int:
    """Number of free trees on n vertices by exhaustive Prüfer decoding."""
    if n <= 2:
        return 1
    seen = set()
    seq = [0] * (n - 2)
    while True:
        seen.add(ahu_code(n, prufer_decode(tuple(seq), n)))
        k = n - 3
        while k >= 0 and seq[k] == n - 1:
            seq[k] = 0
            k -= 1
        if k < 0:
            return len(seen)
        seq[k] += 1
