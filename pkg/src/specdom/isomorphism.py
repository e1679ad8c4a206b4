"""Isomorphism tests and canonical forms.

Trees get a linear-ish canonical form: the lexicographically largest
depth sequence over centroid rootings, with children ordered by their own
canonical sequences. Two trees are isomorphic iff the forms coincide, and
the form doubles as a stable memoization key and a canonical-relabeling
recipe.

General graphs only appear at tiny sizes here, so a permutation/backtracking
check (n <= 12) and a brute-force canonical form (n <= 8) are enough.
"""

from __future__ import annotations

from itertools import permutations
from typing import Sequence

from .errors import InvalidArgumentError
from .graphs import Graph, is_tree, to_graph6

Adjacency = Sequence[Sequence[int]]

# =====================================================================
# Trees
# =====================================================================


def tree_centroids(adj: Adjacency, n: int | None = None) -> tuple[int, ...]:
    """The one or two centroids of a tree given by adjacency lists."""
    if n is None:
        n = len(adj)
    if n == 0:
        raise InvalidArgumentError("empty tree has no centroid")
    if n == 1:
        return (0,)
    # Iterative postorder from vertex 0 to get subtree sizes.
    parent = [-2] * n
    parent[0] = -1
    order = [0]
    for u in order:
        for w in adj[u]:
            if parent[w] == -2:
                parent[w] = u
                order.append(w)
    size = [1] * n
    heaviest_child = [0] * n
    for u in reversed(order[1:]):
        p = parent[u]
        size[p] += size[u]
        if size[u] > heaviest_child[p]:
            heaviest_child[p] = size[u]
    best = n + 1
    winners: list[int] = []
    for v in range(n):
        weight = max(heaviest_child[v], n - size[v])
        if weight < best:
            best = weight
            winners = [v]
        elif weight == best:
            winners.append(v)
    return tuple(sorted(winners))


def canonical_level_sequence(adj: Adjacency, root: int) -> tuple[int, ...]:
    """Lex-largest depth sequence of the tree rooted at `root`.

    Children are emitted in descending order of their own canonical
    sequences, which is exactly what makes the result canonical.
    """

    def rec(v: int, parent: int, depth: int) -> tuple[int, ...]:
        kids = sorted(
            (rec(w, v, depth + 1) for w in adj[v] if w != parent), reverse=True
        )
        out = (depth,)
        for k in kids:
            out += k
        return out

    return rec(root, -1, 0)


def tree_canonical_form(g: Graph) -> tuple[int, ...]:
    """Canonical form of a free tree: best sequence over centroid rootings."""
    if not is_tree(g):
        raise InvalidArgumentError("tree_canonical_form needs a tree")
    return max(canonical_level_sequence(g.adj, c) for c in tree_centroids(g.adj, g.n))


def canonical_relabel_tree(g: Graph) -> Graph:
    """Relabel a tree into its canonical labeling (preorder of the canonical form).

    Isomorphic trees map to the identical labeled graph.
    """
    if not is_tree(g):
        raise InvalidArgumentError("canonical_relabel_tree needs a tree")
    cents = tree_centroids(g.adj, g.n)
    root = max(cents, key=lambda c: canonical_level_sequence(g.adj, c))

    labels = [-1] * g.n
    edges: list[tuple[int, int]] = []
    counter = 0

    def subtree_key(v: int, parent: int, depth: int) -> tuple[int, ...]:
        kids = sorted(
            (subtree_key(w, v, depth + 1) for w in g.adj[v] if w != parent),
            reverse=True,
        )
        out = (depth,)
        for k in kids:
            out += k
        return out

    def visit(v: int, parent: int) -> None:
        nonlocal counter
        my_label = counter
        labels[v] = my_label
        counter += 1
        kids = [(subtree_key(w, v, 1), w) for w in g.adj[v] if w != parent]
        kids.sort(reverse=True)
        for _, w in kids:
            edges.append((my_label, counter))
            visit(w, v)

    visit(root, -1)
    return Graph(g.n, edges)


def trees_isomorphic(g1: Graph, g2: Graph) -> bool:
    return tree_canonical_form(g1) == tree_canonical_form(g2)


# =====================================================================
# General graphs (tiny n only)
# =====================================================================

_GENERAL_ISO_LIMIT = 12
_GENERAL_CANON_LIMIT = 8


def _neighborhood_profile(g: Graph) -> list[tuple[int, tuple[int, ...]]]:
    return [
        (len(g.adj[v]), tuple(sorted(len(g.adj[w]) for w in g.adj[v])))
        for v in range(g.n)
    ]


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Exact isomorphism test; trees at any size, general graphs for n <= 12."""
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    if g1.degree_sequence() != g2.degree_sequence():
        return False
    t1, t2 = is_tree(g1), is_tree(g2)
    if t1 != t2:
        return False
    if t1:
        return trees_isomorphic(g1, g2)
    if g1.n > _GENERAL_ISO_LIMIT:
        raise InvalidArgumentError(
            f"general-graph isomorphism limited to n <= {_GENERAL_ISO_LIMIT}"
        )
    prof1 = _neighborhood_profile(g1)
    prof2 = _neighborhood_profile(g2)
    if sorted(prof1) != sorted(prof2):
        return False

    n = g1.n
    # Map g1 vertices in an order that keeps the partial map connected when
    # possible, so adjacency constraints prune early.
    order: list[int] = []
    seen = [False] * n
    start = max(range(n), key=lambda v: len(g1.adj[v]))
    stack = [start]
    while stack:
        u = stack.pop()
        if seen[u]:
            continue
        seen[u] = True
        order.append(u)
        stack.extend(w for w in g1.adj[u] if not seen[w])
    order.extend(v for v in range(n) if not seen[v])

    image = [-1] * n
    used = [False] * n

    def extend(idx: int) -> bool:
        if idx == n:
            return True
        u = order[idx]
        for v in range(n):
            if used[v] or prof1[u] != prof2[v]:
                continue
            ok = True
            for w in g1.adj[u]:
                mapped = image[w]
                if mapped != -1 and not g2.has_edge(v, mapped):
                    ok = False
                    break
            if ok:
                # Also enforce non-adjacency for mapped non-neighbors.
                for w in range(n):
                    mapped = image[w]
                    if mapped != -1 and w not in g1._sets[u] and g2.has_edge(v, mapped):
                        ok = False
                        break
            if ok:
                image[u] = v
                used[v] = True
                if extend(idx + 1):
                    return True
                image[u] = -1
                used[v] = False
        return False

    return extend(0)


def canonical_graph6(g: Graph) -> str:
    """Canonical graph6 string: AHU labeling for trees, brute force for n <= 8."""
    if is_tree(g):
        return to_graph6(canonical_relabel_tree(g))
    if g.n > _GENERAL_CANON_LIMIT:
        raise InvalidArgumentError(
            f"canonical form for general graphs limited to n <= {_GENERAL_CANON_LIMIT}"
        )
    best: str | None = None
    verts = range(g.n)
    for perm in permutations(verts):
        relabeled = Graph(g.n, ((perm[u], perm[v]) for u, v in g.edges()))
        s = to_graph6(relabeled)
        if best is None or s < best:
            best = s
    assert best is not None
    return best
