"""Graph representation, named-family constructors, and structural predicates.

Vertices are always 0..n-1. Graphs are simple, undirected, and immutable
after construction; every edit operation returns a fresh graph (plus a dense
relabeling map where vertices disappear).

The caterpillar family T(spine, i, j) is the workhorse: a path on `spine`
vertices with one pendant vertex attached to each of the first i and last j
spine positions. Its labeling is pinned (spine first, then leading pendants,
then trailing pendants) so golden tests stay stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, InvalidArgumentError

# =====================================================================
# Core type
# =====================================================================


class Graph:
    """Simple undirected graph on vertices 0..n-1 with sorted adjacency."""

    __slots__ = ("n", "adj", "edge_count", "_sets")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InvalidArgumentError("vertex count must be nonnegative")
        neigh: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidArgumentError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise InvalidArgumentError(f"self-loop at {u}")
            neigh[u].add(v)
            neigh[v].add(u)
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(s)) for s in neigh
        )
        self._sets: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in neigh)
        self.edge_count = sum(len(s) for s in neigh) // 2

    @classmethod
    def _from_sorted_adj(cls, adj: tuple[tuple[int, ...], ...]) -> "Graph":
        """Trusted fast path for enumerators; adj must already be symmetric+sorted."""
        g = object.__new__(cls)
        g.n = len(adj)
        g.adj = adj
        g._sets = tuple(frozenset(a) for a in adj)
        g.edge_count = sum(len(a) for a in adj) // 2
        return g

    # ---- queries ----

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._sets[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in self.adj[u]:
                if v > u:
                    yield (u, v)

    def degree_sequence(self) -> tuple[int, ...]:
        """Degrees in nonincreasing order."""
        return tuple(sorted((len(a) for a in self.adj), reverse=True))

    # ---- equality is labeled equality; isomorphism lives elsewhere ----

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.adj == other.adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


@dataclass(frozen=True)
class TreeWitness:
    """A graph together with a root-directed parent array proving it is a tree.

    parent[root] = -1; parent reconstructs exactly the edge set.
    """

    graph: Graph
    parent: tuple[int, ...]

    def __post_init__(self) -> None:
        g = self.graph
        if len(self.parent) != g.n:
            raise InvalidArgumentError("parent array length != vertex count")
        roots = [v for v, p in enumerate(self.parent) if p == -1]
        if g.n > 0 and (len(roots) != 1 or g.edge_count != g.n - 1):
            raise InvalidArgumentError("parent array does not describe a tree")
        edges = {
            (min(v, p), max(v, p)) for v, p in enumerate(self.parent) if p != -1
        }
        if edges != set(self.graph.edges()):
            raise InvalidArgumentError("parent array does not match the edge set")
        if g.n > 0 and not is_connected(g):
            raise InvalidArgumentError("tree witness for a disconnected graph")

    @property
    def root(self) -> int:
        return self.parent.index(-1)

    @classmethod
    def from_graph(cls, g: Graph, root: int = 0) -> "TreeWitness":
        """BFS-orient a tree at `root`; raises if g is not a tree."""
        if g.n == 0:
            raise InvalidArgumentError("empty graph is not a tree")
        if g.edge_count != g.n - 1 or not is_connected(g):
            raise InvalidArgumentError("graph is not a tree")
        parent = [-2] * g.n
        parent[root] = -1
        stack = [root]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if parent[w] == -2:
                    parent[w] = u
                    stack.append(w)
        return cls(g, tuple(parent))


def as_tree(obj: Graph | TreeWitness) -> TreeWitness:
    """Accept either a Graph or a TreeWitness where a tree is required."""
    if isinstance(obj, TreeWitness):
        return obj
    return TreeWitness.from_graph(obj)


@dataclass(frozen=True)
class CaterpillarSpec:
    """Parameters (spine_len, i, j) of the pendant-path caterpillar family."""

    spine_len: int  # d+1 in diameter terms
    i: int  # pendants on the first i spine vertices
    j: int  # pendants on the last j spine vertices

    def __post_init__(self) -> None:
        if self.spine_len < 1:
            raise InvalidArgumentError("spine must have at least one vertex")
        if not (0 <= self.j <= self.i <= self.spine_len):
            raise InvalidArgumentError(
                f"need 0 <= j <= i <= spine_len, got i={self.i}, j={self.j}, "
                f"spine_len={self.spine_len}"
            )

    @property
    def n(self) -> int:
        return self.spine_len + self.i + self.j


# =====================================================================
# Constructors
# =====================================================================


def build_path(n: int) -> Graph:
    """Path 0-1-...-(n-1)."""
    if n < 1:
        raise InvalidArgumentError("path needs at least one vertex")
    return Graph(n, ((k, k + 1) for k in range(n - 1)))


def build_cycle(n: int) -> Graph:
    """Cycle on n >= 3 vertices."""
    if n < 3:
        raise InvalidArgumentError("cycle needs at least three vertices")
    return Graph(n, [(k, (k + 1) % n) for k in range(n)])


def build_complete(n: int) -> Graph:
    """Complete graph on n vertices."""
    if n < 1:
        raise InvalidArgumentError("complete graph needs at least one vertex")
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def build_star(n: int) -> Graph:
    """Star with center 0 and n-1 leaves."""
    if n < 1:
        raise InvalidArgumentError("star needs at least one vertex")
    return Graph(n, ((0, v) for v in range(1, n)))


def build_corona(g: Graph) -> Graph:
    """Attach one fresh pendant vertex to every vertex of g.

    Original labels are preserved; the pendant of v is labeled n+v.
    """
    if g.n == 0:
        raise InvalidArgumentError("corona of the empty graph is undefined")
    edges = list(g.edges())
    edges.extend((v, g.n + v) for v in range(g.n))
    return Graph(2 * g.n, edges)


def build_T(spine_len: int | CaterpillarSpec, i: int | None = None, j: int | None = None) -> Graph:
    """Caterpillar with pendants on the first i and last j spine vertices.

    Labels: spine 0..spine_len-1; leading pendants spine_len..spine_len+i-1
    (pendant k hangs off spine vertex k); trailing pendants follow (pendant k
    hangs off spine vertex spine_len-1-k).
    """
    if isinstance(spine_len, CaterpillarSpec):
        spec = spine_len
    else:
        if i is None or j is None:
            raise InvalidArgumentError("build_T needs spine_len, i, j")
        spec = CaterpillarSpec(spine_len, i, j)
    s = spec.spine_len
    edges = [(k, k + 1) for k in range(s - 1)]
    nxt = s
    for k in range(spec.i):
        edges.append((k, nxt))
        nxt += 1
    for k in range(spec.j):
        edges.append((s - 1 - k, nxt))
        nxt += 1
    return Graph(spec.n, edges)


def build_starlike(
    a: Sequence[int], b: Sequence[int], c: Sequence[int]
) -> Graph:
    """Spider with legs P_{3a_k+2}, P_{3b_k+1}, P_{3c_k} hanging off center 0.

    Leg lengths are vertex counts; a_k, b_k >= 0, c_k >= 1. At least one leg.
    """
    if any(x < 0 for x in a) or any(x < 0 for x in b):
        raise InvalidArgumentError("a and b entries must be nonnegative")
    if any(x < 1 for x in c):
        raise InvalidArgumentError("c entries must be positive")
    lengths = [3 * x + 2 for x in a] + [3 * x + 1 for x in b] + [3 * x for x in c]
    if not lengths:
        raise InvalidArgumentError("a starlike tree needs at least one leg")
    edges = []
    nxt = 1
    for leg in lengths:
        prev = 0
        for _ in range(leg):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, edges)


def build_Wn(n: int) -> Graph:
    """Path on n-4 vertices with two extra pendant vertices at each end.

    The smallest sensible instance is n = 6 (two spine vertices). Its
    spectral radius is exactly 2 for every n.
    """
    if n < 6:
        raise InvalidArgumentError("W_n needs n >= 6")
    m = n - 4
    edges = [(k, k + 1) for k in range(m - 1)]
    edges += [(0, m), (0, m + 1), (m - 1, m + 2), (m - 1, m + 3)]
    return Graph(n, edges)


def build_S10() -> Graph:
    """Spider on 10 vertices: center of degree 5, four 2-vertex legs, one leaf.

    Its spectral radius is exactly 1+sqrt(2), the largest root of x^4-6x^2+1.
    """
    return build_starlike([0, 0, 0, 0], [0], [])


# ---- figure trees -------------------------------------------------------
# Each entry: (spine vertex count, attachments). An attachment (k, 1) hangs a
# single pendant off spine position k (0-based); (k, 2) hangs a path of two
# vertices. The float is the 4-decimal radius printed alongside the drawing;
# H23's printed value is a known misprint (true value rounds to 2.1603) and
# H16/H18 genuinely share their radius (cospectral pair).

_H_TABLE: dict[int, tuple[int, tuple[tuple[int, int], ...], float]] = {
    1: (5, ((2, 2), (2, 2)), 2.2361),
    2: (6, ((2, 1), (2, 2)), 2.2059),
    3: (6, ((2, 1), (3, 2)), 2.1358),
    4: (6, ((0, 1), (1, 1), (2, 1)), 2.1120),
    5: (6, ((0, 1), (1, 1), (3, 1)), 2.0743),
    6: (6, ((2, 2), (5, 1)), 2.0421),
    7: (6, ((0, 1), (1, 1), (5, 1)), 2.0),
    8: (1, ((0, 2), (0, 2), (0, 2), (0, 2), (0, 2)), 2.4495),
    9: (6, ((2, 2), (2, 2), (2, 1)), 2.4236),
    10: (6, ((2, 2), (2, 2), (3, 1)), 2.3213),
    11: (6, ((2, 2), (2, 1), (3, 2)), 2.3073),
    12: (6, ((0, 1), (2, 2), (2, 1), (3, 1)), 2.2966),
    13: (6, ((0, 1), (2, 1), (3, 2), (3, 1)), 2.2920),
    14: (6, ((0, 1), (3, 2), (3, 2)), 2.2552),
    15: (6, ((0, 1), (1, 1), (3, 2), (3, 1)), 2.2470),
    16: (6, ((0, 1), (4, 2), (4, 1), (5, 1)), 2.2143),
    17: (6, ((0, 1), (1, 1), (2, 2), (3, 1)), 2.2216),
    18: (6, ((0, 1), (1, 1), (2, 1), (3, 2)), 2.2143),
    19: (6, ((0, 1), (2, 1), (3, 1), (4, 1), (5, 1)), 2.1978),
    20: (6, ((0, 1), (1, 1), (2, 2), (5, 1)), 2.1566),
    21: (6, ((0, 1), (1, 2), (3, 2)), 2.1358),
    22: (7, ((0, 1), (4, 1), (5, 1), (6, 1)), 2.1224),
    23: (6, ((0, 1), (1, 1), (2, 1), (4, 1), (5, 1)), 2.1606),
    24: (6, ((0, 1), (1, 1), (4, 2), (5, 1)), 2.0922),
    25: (7, ((0, 1), (1, 1), (5, 1), (6, 1)), 2.0529),
}

# H23's printed radius does not match any tree in its class; the drawn tree's
# radius is 2.16026 to five decimals.
H_PRINTED_ERRATA: dict[int, float] = {23: 2.1606}


def _spine_with_attachments(
    spine: int, attachments: tuple[tuple[int, int], ...]
) -> Graph:
    edges = [(k, k + 1) for k in range(spine - 1)]
    nxt = spine
    for pos, length in attachments:
        prev = pos
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, edges)


def build_H(k: int) -> Graph:
    """The k-th tree (1..25) of the two reference radius tables (n=9 and n=11)."""
    if k not in _H_TABLE:
        raise InvalidArgumentError("H index must be in 1..25")
    spine, attachments, _ = _H_TABLE[k]
    return _spine_with_attachments(spine, attachments)


def h_printed_radius(k: int) -> float:
    """The 4-decimal radius printed next to the k-th reference tree."""
    if k not in _H_TABLE:
        raise InvalidArgumentError("H index must be in 1..25")
    return _H_TABLE[k][2]


def build_fig8_tree(k: int) -> Graph:
    """The three auxiliary trees used in the diameter/degree case analysis.

    k=1: n=10; k=2: n=16; k=3: n=13 (the unique member of its constrained
    class, with radius 2.2882 to four decimals).
    """
    if k == 1:
        return _spine_with_attachments(6, ((2, 2), (3, 2)))
    if k == 2:
        g = _spine_with_attachments(7, ((2, 2), (4, 2)))
        base = g.n
        edges = list(g.edges())
        edges += [
            (3, base),
            (base, base + 1),
            (base + 1, base + 2),
            (base, base + 3),
            (base + 3, base + 4),
        ]
        return Graph(base + 5, edges)
    if k == 3:
        g = _spine_with_attachments(7, ((2, 1), (4, 1)))
        base = g.n
        edges = list(g.edges())
        edges += [(3, base), (base, base + 1), (base + 1, base + 2), (base, base + 3)]
        return Graph(base + 4, edges)
    raise InvalidArgumentError("fig8 tree index must be 1, 2, or 3")


# =====================================================================
# Structural predicates
# =====================================================================


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    seen = bytearray(g.n)
    seen[0] = 1
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if not seen[w]:
                seen[w] = 1
                count += 1
                stack.append(w)
    return count == g.n


def is_tree(g: Graph) -> bool:
    return g.n > 0 and g.edge_count == g.n - 1 and is_connected(g)


def _bfs_dist(g: Graph, src: int) -> list[int]:
    dist = [-1] * g.n
    dist[src] = 0
    frontier = [src]
    while frontier:
        nxt = []
        for u in frontier:
            for w in g.adj[u]:
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        frontier = nxt
    return dist


def diameter(g: Graph) -> int:
    """Max shortest-path distance; domain-error on disconnected input."""
    if not is_connected(g):
        raise DomainError("diameter of a disconnected graph")
    if g.n == 1:
        return 0
    # Two sweeps suffice for trees; general graphs need all sources.
    if g.edge_count == g.n - 1:
        d0 = _bfs_dist(g, 0)
        far = d0.index(max(d0))
        d1 = _bfs_dist(g, far)
        return max(d1)
    return max(max(_bfs_dist(g, v)) for v in range(g.n))


def max_degree(g: Graph) -> int:
    if g.n == 0:
        raise InvalidArgumentError("max degree of the empty graph")
    return max(len(a) for a in g.adj)


def leaves(g: Graph) -> tuple[int, ...]:
    """Vertices of degree exactly 1."""
    return tuple(v for v in range(g.n) if len(g.adj[v]) == 1)


def support_vertices(g: Graph) -> tuple[int, ...]:
    """Non-leaf vertices adjacent to at least one leaf.

    The non-leaf requirement only matters for a lone edge (both endpoints are
    leaves, neither is a support); in any larger connected graph a leaf's
    neighbor has degree >= 2 anyway.
    """
    leaf_set = set(leaves(g))
    return tuple(
        v
        for v in range(g.n)
        if len(g.adj[v]) >= 2 and any(w in leaf_set for w in g.adj[v])
    )


def leaf_multiplicity(g: Graph, v: int) -> int:
    """Number of degree-1 neighbors of v."""
    if not 0 <= v < g.n:
        raise InvalidArgumentError(f"vertex {v} out of range")
    return sum(1 for w in g.adj[v] if len(g.adj[w]) == 1)


def max_leaf_multiplicity(g: Graph) -> int:
    """max over v of leaf_multiplicity(g, v); 0 for the single vertex."""
    if g.n == 1:
        return 0
    deg1 = [len(a) == 1 for a in g.adj]
    return max(sum(1 for w in g.adj[v] if deg1[w]) for v in range(g.n))


def branching_vertices(g: Graph) -> frozenset[int]:
    """Vertices of degree >= 3."""
    return frozenset(v for v in range(g.n) if len(g.adj[v]) >= 3)


def is_caterpillar(g: Graph) -> bool:
    """True iff g is a tree that becomes a path (or empty) after removing leaves."""
    if not is_tree(g):
        return False
    rest = [v for v in range(g.n) if len(g.adj[v]) > 1]
    if len(rest) <= 1:
        return True
    keep = set(rest)
    # The remainder is a path iff every kept vertex keeps degree <= 2 and the
    # kept graph is connected; connectivity is inherited from the tree.
    return all(sum(1 for w in g.adj[v] if w in keep) <= 2 for v in rest)


# =====================================================================
# Edit operations
# =====================================================================


def subdivide_edge(g: Graph, u: int, v: int, times: int = 1) -> Graph:
    """Insert `times` fresh degree-2 vertices along the edge uv."""
    if times < 1:
        raise InvalidArgumentError("times must be >= 1")
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise InvalidArgumentError(f"({u},{v}) is not an edge")
    edges = [e for e in g.edges() if e != (min(u, v), max(u, v))]
    chain = [u] + list(range(g.n, g.n + times)) + [v]
    edges.extend(zip(chain, chain[1:]))
    return Graph(g.n + times, edges)


def delete_vertices(g: Graph, drop: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Remove vertices, relabel densely; returns (graph, old->new map)."""
    dropset = set(drop)
    if any(not 0 <= v < g.n for v in dropset):
        raise InvalidArgumentError("vertex out of range")
    remap: dict[int, int] = {}
    for v in range(g.n):
        if v not in dropset:
            remap[v] = len(remap)
    edges = [
        (remap[a], remap[b])
        for a, b in g.edges()
        if a not in dropset and b not in dropset
    ]
    return Graph(len(remap), edges), remap


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise InvalidArgumentError(f"({u},{v}) is not an edge")
    return Graph(g.n, (e for e in g.edges() if e != (min(u, v), max(u, v))))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if not (0 <= u < g.n and 0 <= v < g.n) or u == v or g.has_edge(u, v):
        raise InvalidArgumentError(f"cannot add edge ({u},{v})")
    return Graph(g.n, list(g.edges()) + [(u, v)])


def smooth_vertex(g: Graph, v: int) -> tuple[Graph, dict[int, int]]:
    """Suppress a degree-2 vertex: delete it and join its two neighbors."""
    if not 0 <= v < g.n or g.degree(v) != 2:
        raise InvalidArgumentError("smoothing requires a degree-2 vertex")
    a, b = g.adj[v]
    if g.has_edge(a, b):
        raise InvalidArgumentError("smoothing would create a parallel edge")
    h, remap = delete_vertices(g, [v])
    return add_edge(h, remap[a], remap[b]), remap


# =====================================================================
# graph6 interchange format
# =====================================================================


def to_graph6(g: Graph) -> str:
    """Encode as graph6 (single-byte size form, n <= 62)."""
    if g.n > 62:
        raise InvalidArgumentError("graph6 encoder supports n <= 62")
    bits: list[int] = []
    for col in range(1, g.n):
        for row in range(col):
            bits.append(1 if g.has_edge(row, col) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        word = 0
        for bit in bits[k : k + 6]:
            word = (word << 1) | bit
        out.append(chr(word + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    """Decode a single graph6 line (single-byte size form)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise InvalidArgumentError("empty graph6 string")
    n = ord(s[0]) - 63
    if n < 0 or n > 62:
        raise InvalidArgumentError("unsupported graph6 size byte")
    need = (n * (n - 1) // 2 + 5) // 6
    body = s[1:]
    if len(body) != need:
        raise InvalidArgumentError(
            f"graph6 body length {len(body)} != expected {need} for n={n}"
        )
    bits: list[int] = []
    for ch in body:
        word = ord(ch) - 63
        if not 0 <= word < 64:
            raise InvalidArgumentError(f"invalid graph6 byte {ch!r}")
        bits.extend((word >> k) & 1 for k in range(5, -1, -1))
    edges = []
    idx = 0
    for col in range(1, n):
        for row in range(col):
            if bits[idx]:
                edges.append((row, col))
            idx += 1
    return Graph(n, edges)
