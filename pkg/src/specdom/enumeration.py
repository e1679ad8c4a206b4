"""Streams of non-isomorphic free trees and tiny labeled connected graphs.

Free trees are generated as canonical rooted level sequences (root at
depth 0, children encoded depth-first with subtrees in descending order)
using the classic constant-amortized-time successor step, then filtered
down to one representative per free-isomorphism class: keep a sequence
only when its root is a centroid and, for bicentral trees, when it is the
lexicographically larger of the two centroid-rooted canonical forms. The
stream order (descending lexicographic on level sequences) is the
deterministic order used for checkpointing and resumption.

The labeled connected-graph stream brute-forces edge subsets; it exists
to cross-check tree-only searches at very small n, where isomorphic
duplicates are harmless for minimum-finding.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from .config import RunConfig
from .errors import DomainError, InvalidArgumentError, ResourceLimitError
from .graphs import (
    Graph,
    TreeWitness,
    diameter,
    is_caterpillar,
    is_tree,
    max_degree,
    max_leaf_multiplicity,
)
from .domination import gamma_exact, tree_domination_number
from .isomorphism import canonical_graph6, canonical_level_sequence, tree_centroids
from .polynomials import IntPolynomial, count_roots_above
from .spectral import (
    Ordering,
    RadiusEnclosure,
    char_poly,
    char_poly_tree,
    compare_enclosures,
    radius_from_poly,
    refine_enclosure,
)

# =====================================================================
# Rooted level sequences
# =====================================================================


def _successor(levels: list[int]) -> bool:
    """Step to the next canonical rooted level sequence; False at the star."""
    p = -1
    for k in range(len(levels) - 1, 0, -1):
        if levels[k] > 1:
            p = k
            break
    if p < 0:
        return False
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    d = p - q
    for k in range(p, len(levels)):
        levels[k] = levels[k - d]
    return True


def rooted_level_sequences(
    n: int, resume_after: tuple[int, ...] | None = None
) -> Iterator[tuple[int, ...]]:
    """All canonical rooted level sequences on n vertices, descending lex."""
    if n < 1:
        raise InvalidArgumentError(f"need n >= 1, got {n}")
    if resume_after is None:
        levels = list(range(n))
        yield tuple(levels)
    else:
        if len(resume_after) != n or resume_after[0] != 0:
            raise InvalidArgumentError(
                f"resume sequence {resume_after} is not a length-{n} level sequence"
            )
        levels = list(resume_after)
    while _successor(levels):
        yield tuple(levels)


def _parents_from_levels(levels: tuple[int, ...]) -> tuple[int, ...]:
    last_at_depth = {0: 0}
    parent = [-1] * len(levels)
    for k in range(1, len(levels)):
        parent[k] = last_at_depth[levels[k] - 1]
        last_at_depth[levels[k]] = k
    return tuple(parent)


def level_sequence_of(t: TreeWitness) -> tuple[int, ...]:
    """Depth sequence of a witness whose labels are in preorder (as emitted)."""
    depth = [0] * t.graph.n
    for v, p in enumerate(t.parent):
        if p >= 0:
            depth[v] = depth[p] + 1
    return tuple(depth)


# =====================================================================
# Free trees
# =====================================================================


def _keeps_free_representative(
    levels: tuple[int, ...], adj: tuple[tuple[int, ...], ...]
) -> bool:
    centroids = tree_centroids(adj)
    if 0 not in centroids:
        return False
    if len(centroids) == 2:
        other = centroids[0] or centroids[1]
        return levels >= canonical_level_sequence(adj, other)
    return True


def free_trees(
    n: int,
    *,
    config: RunConfig | None = None,
    resume_after: tuple[int, ...] | None = None,
) -> Iterator[TreeWitness]:
    """One representative per isomorphism class of trees on n vertices."""
    limit = (config or RunConfig()).max_tree_n
    if n > limit:
        raise ResourceLimitError(f"free_trees limited to n <= {limit}, got {n}")
    for levels in rooted_level_sequences(n, resume_after):
        parent = _parents_from_levels(levels)
        edges = [(p, v) for v, p in enumerate(parent) if p >= 0]
        g = Graph(n, edges)
        if not _keeps_free_representative(levels, g.adj):
            continue
        yield TreeWitness(g, parent)


def connected_graphs_labeled(
    n: int, *, config: RunConfig | None = None
) -> Iterator[Graph]:
    """All labeled connected simple graphs on n vertices (brute force)."""
    limit = (config or RunConfig()).max_graph_n
    if n > limit:
        raise ResourceLimitError(
            f"connected_graphs_labeled limited to n <= {limit}, got {n}"
        )
    if n < 1:
        raise InvalidArgumentError(f"need n >= 1, got {n}")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    full = (1 << n) - 1
    for mask in range(1 << len(pairs)):
        nbr = [0] * n
        bit = mask
        k = 0
        while bit:
            if bit & 1:
                u, v = pairs[k]
                nbr[u] |= 1 << v
                nbr[v] |= 1 << u
            bit >>= 1
            k += 1
        reach = 1
        frontier = 1 | nbr[0]
        while frontier != reach:
            reach, frontier = frontier, frontier
            for v in range(n):
                if reach >> v & 1:
                    frontier |= nbr[v]
        if reach != full:
            continue
        yield Graph(n, (pairs[k] for k in range(len(pairs)) if mask >> k & 1))


# =====================================================================
# Class filters
# =====================================================================


@dataclass(frozen=True)
class TreeClassFilter:
    """Conjunctive structural filter for tree/graph streams."""

    gamma_eq: int | None = None
    max_degree_le: int | None = None
    leaf_mult_le: int | None = None
    diameter_eq: int | None = None
    diameter_le: int | None = None
    caterpillar_only: bool = False

    def __post_init__(self) -> None:
        for name in ("gamma_eq", "max_degree_le", "leaf_mult_le", "diameter_eq", "diameter_le"):
            value = getattr(self, name)
            if value is not None and value < 0:
                raise InvalidArgumentError(f"{name} must be nonnegative, got {value}")


def _default_gamma(g: Graph) -> int:
    if is_tree(g):
        return tree_domination_number(TreeWitness.from_graph(g))
    return gamma_exact(g).gamma


def filter_class(
    src: Iterable[TreeWitness | Graph],
    f: TreeClassFilter,
    gamma_oracle: Callable[[Graph], int] | None = None,
) -> Iterator[TreeWitness | Graph]:
    """Lazily filter a stream; gamma (the expensive predicate) goes last."""
    oracle = gamma_oracle or _default_gamma
    for item in src:
        g = item.graph if isinstance(item, TreeWitness) else item
        if f.max_degree_le is not None and max_degree(g) > f.max_degree_le:
            continue
        if f.leaf_mult_le is not None and max_leaf_multiplicity(g) > f.leaf_mult_le:
            continue
        if f.diameter_eq is not None and diameter(g) != f.diameter_eq:
            continue
        if f.diameter_le is not None and diameter(g) > f.diameter_le:
            continue
        if f.caterpillar_only and not is_caterpillar(g):
            continue
        if f.gamma_eq is not None and oracle(g) != f.gamma_eq:
            continue
        yield item


# =====================================================================
# Minimizer search
# =====================================================================


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a minimum-spectral-radius scan over a class."""

    minimizers: tuple[str, ...]  # canonical graph6, sorted
    rho: RadiusEnclosure
    class_size: int
    runtime_stats: dict = field(compare=False)

    def to_json(self) -> dict:
        return {
            "minimizers": list(self.minimizers),
            "rho": self.rho.to_json(),
            "class_size": self.class_size,
        }


def _poly_of(item: TreeWitness | Graph) -> tuple[Graph, IntPolynomial]:
    if isinstance(item, TreeWitness):
        return item.graph, char_poly_tree(item)
    if is_tree(item):
        return item, char_poly_tree(TreeWitness.from_graph(item))
    return item, char_poly(item)


def _enclose(g: Graph, p: IntPolynomial) -> RadiusEnclosure:
    if g.n == 1:
        zero = Fraction(0)
        return RadiusEnclosure(zero, zero, p, exact_value="0")
    return radius_from_poly(p, max_degree(g), Fraction(1, 16))


def _scan(
    items: Iterable[TreeWitness | Graph],
) -> tuple[list[str], RadiusEnclosure | None, dict]:
    """Running-minimum scan; returns (canonical minimizers, enclosure, stats)."""
    best_g6: list[str] = []
    best_enc: RadiusEnclosure | None = None
    stats = {"examined": 0, "excluded_fast": 0, "full_compares": 0}
    for item in items:
        stats["examined"] += 1
        g, p = _poly_of(item)
        if best_enc is not None:
            if p != best_enc.source_poly and count_roots_above(p, best_enc.hi):
                # rho(candidate) > hi >= rho(best): certified not minimal.
                stats["excluded_fast"] += 1
                continue
            enc = _enclose(g, p)
            stats["full_compares"] += 1
            order = compare_enclosures(enc, best_enc)
            if order == Ordering.Less:
                best_g6 = [canonical_graph6(g)]
                best_enc = enc
            elif order == Ordering.Equal:
                best_g6.append(canonical_graph6(g))
        else:
            best_g6 = [canonical_graph6(g)]
            best_enc = _enclose(g, p)
    return best_g6, best_enc, stats


def _scan_chunk(chunk: list[str]) -> tuple[list[str], list[str], int, dict]:
    """Worker entry: scan graph6 strings, return picklable partial result."""
    from .graphs import from_graph6

    g6, enc, stats = _scan(from_graph6(s) for s in chunk)
    assert enc is not None
    return g6, enc.source_poly.to_json(), len(chunk), stats


def _chunks(items: Iterable[str], size: int) -> Iterator[list[str]]:
    batch: list[str] = []
    for item in items:
        batch.append(item)
        if len(batch) == size:
            yield batch
            batch = []
    if batch:
        yield batch


_PARALLEL_CHUNK = 512


def _scan_parallel(
    items: Iterable[TreeWitness | Graph], workers: int
) -> tuple[list[str], RadiusEnclosure | None, dict]:
    from concurrent.futures import ProcessPoolExecutor
    from .graphs import from_graph6, to_graph6

    stream = (
        to_graph6(item.graph if isinstance(item, TreeWitness) else item)
        for item in items
    )
    best_g6: list[str] = []
    best_enc: RadiusEnclosure | None = None
    stats = {"examined": 0, "excluded_fast": 0, "full_compares": 0}
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for g6, poly_json, size, chunk_stats in pool.map(
            _scan_chunk, _chunks(stream, _PARALLEL_CHUNK)
        ):
            stats["examined"] += size
            for key in ("excluded_fast", "full_compares"):
                stats[key] += chunk_stats[key]
            poly = IntPolynomial.from_json(poly_json)
            enc = _enclose(from_graph6(g6[0]), poly)
            if best_enc is None:
                best_g6, best_enc = g6, enc
                continue
            order = compare_enclosures(enc, best_enc)
            if order == Ordering.Less:
                best_g6, best_enc = g6, enc
            elif order == Ordering.Equal:
                best_g6.extend(g6)
    return best_g6, best_enc, stats


def find_minimizer(
    class_stream: Iterable[TreeWitness | Graph],
    *,
    config: RunConfig | None = None,
) -> SearchResult:
    """All arg-minima of rho over the class, certified by exact comparison."""
    cfg = config or RunConfig()
    started = time.monotonic()
    if cfg.workers > 1:
        best_g6, best_enc, stats = _scan_parallel(class_stream, cfg.workers)
    else:
        best_g6, best_enc, stats = _scan(class_stream)
    if best_enc is None:
        raise DomainError("find_minimizer needs a nonempty class")
    stats["seconds"] = time.monotonic() - started
    return SearchResult(
        minimizers=tuple(sorted(set(best_g6))),
        rho=refine_enclosure(best_enc, Fraction(cfg.tol)),
        class_size=stats["examined"],
        runtime_stats=stats,
    )
