"""Exact minimum domination with certificates.

A set D dominates G when every vertex outside D has a neighbor in D;
gamma(G) is the minimum |D|. Trees get a linear-time rooted DP over three
states per vertex v:

    in_set     v in D
    covered    v not in D, dominated by a child in D
    needs      v not in D, not yet dominated (its parent must be in D)

with leaf base case (1, inf, 0) and

    in_set(v)  = 1 + sum_c min(in_set, covered, needs)
    covered(v) = sum_c min(in_set, covered)
                 + (0 if some child is cheapest in-set, else the smallest
                    in_set - covered upgrade cost)
    needs(v)   = sum_c covered(c)   [children must not be in D]

Forcing a vertex into D just sets its other two states to infinity, which
is also how the lexicographically-smallest certificate is extracted: scan
vertices in increasing order and keep each one whose forced inclusion
leaves the optimum unchanged.

General graphs fall back to branch and bound over closed neighborhoods,
exact but limited to small n.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Iterator

from .errors import DomainError, InvalidArgumentError, ResourceLimitError
from .graphs import Graph, TreeWitness, as_tree, is_tree, support_vertices

_INF = 1 << 30

GAMMA_EXACT_DEFAULT_LIMIT = 24


@dataclass(frozen=True)
class DominationCertificate:
    """A minimum dominating set together with how it was found."""

    set: frozenset[int]
    gamma: int
    method: str  # "tree-dp" or "exhaustive"
    supports_included: bool = False

    def __post_init__(self) -> None:
        if self.gamma != len(self.set):
            raise InvalidArgumentError("certificate size disagrees with gamma")
        if self.method not in ("tree-dp", "exhaustive"):
            raise InvalidArgumentError(f"unknown certificate method {self.method!r}")

    def to_json(self) -> dict:
        return {
            "gamma": self.gamma,
            "set": sorted(self.set),
            "method": self.method,
        }


def is_dominating_set(g: Graph, d: Iterable[int]) -> bool:
    """True iff the closed neighborhoods of d cover every vertex."""
    dset = set(d)
    for v in dset:
        if not (0 <= v < g.n):
            raise InvalidArgumentError(f"vertex {v} out of range for n={g.n}")
    covered = set(dset)
    for v in dset:
        covered.update(g.adj[v])
    return len(covered) == g.n


# =====================================================================
# Tree DP
# =====================================================================


def _children_and_order(t: TreeWitness) -> tuple[list[list[int]], list[int]]:
    """Children lists and a root-first traversal order."""
    n = t.graph.n
    kids: list[list[int]] = [[] for _ in range(n)]
    for v, p in enumerate(t.parent):
        if p >= 0:
            kids[p].append(v)
    order = [t.root]
    for v in order:
        order.extend(kids[v])
    return kids, order


def _tree_gamma_value(t: TreeWitness, forced: frozenset[int] = frozenset()) -> int:
    """gamma of the tree with `forced` vertices required to be in D."""
    kids, order = _children_and_order(t)
    n = t.graph.n
    in_set = [0] * n
    covered = [0] * n
    needs = [0] * n
    for v in reversed(order):
        if not kids[v]:
            in_set[v], covered[v], needs[v] = 1, _INF, 0
        else:
            s_in = 1
            s_cov = 0
            s_needs = 0
            upgrade = _INF
            for c in kids[v]:
                s_in += min(in_set[c], covered[c], needs[c])
                best = min(in_set[c], covered[c])
                s_cov += best
                if in_set[c] <= covered[c]:
                    upgrade = 0
                else:
                    upgrade = min(upgrade, in_set[c] - covered[c])
                s_needs += covered[c]
            in_set[v] = s_in
            covered[v] = min(s_cov + upgrade, _INF)
            needs[v] = min(s_needs, _INF)
        if v in forced:
            covered[v] = needs[v] = _INF
    return min(in_set[t.root], covered[t.root])


def tree_domination_number(t: TreeWitness | Graph) -> int:
    """gamma of a tree, value only (linear time)."""
    return _tree_gamma_value(as_tree(t))


def _lex_min_extension(
    t: TreeWitness, gamma: int, forced: list[int]
) -> frozenset[int]:
    """Grow `forced` to the lexicographically smallest optimal set.

    Greedy is exact here: whenever gamma-with-forced equals gamma, some
    optimal set contains the forced prefix, and the scan commits to a
    vertex only when that stays true.
    """
    n = t.graph.n
    out = list(forced)
    for v in range(n):
        if len(out) == gamma:
            break
        if v in out:
            continue
        if _tree_gamma_value(t, frozenset(out + [v])) == gamma:
            out.append(v)
    assert len(out) == gamma, "lex-min reconstruction must reach gamma"
    return frozenset(out)


def gamma_tree(t: TreeWitness | Graph) -> DominationCertificate:
    """Exact gamma on a tree with the lex-smallest minimum dominating set."""
    witness = as_tree(t)
    gamma = _tree_gamma_value(witness)
    chosen = _lex_min_extension(witness, gamma, [])
    supports = set(support_vertices(witness.graph))
    return DominationCertificate(
        chosen, gamma, "tree-dp", supports_included=supports <= chosen
    )


def dominating_set_with_supports(t: TreeWitness | Graph) -> DominationCertificate:
    """A minimum dominating set containing every support vertex.

    Such a set always exists on trees (swapping a leaf for its support
    never hurts); the DP is rerun with the supports pinned in.
    """
    witness = as_tree(t)
    gamma = _tree_gamma_value(witness)
    supports = sorted(support_vertices(witness.graph))
    forced_gamma = _tree_gamma_value(witness, frozenset(supports))
    if forced_gamma != gamma:
        raise DomainError(
            f"no minimum dominating set contains all supports "
            f"(gamma={gamma}, with supports {forced_gamma})"
        )
    chosen = _lex_min_extension(witness, gamma, supports)
    return DominationCertificate(chosen, gamma, "tree-dp", supports_included=True)


# =====================================================================
# Branch and bound for general small graphs
# =====================================================================


def _closed_neighborhood_masks(g: Graph) -> list[int]:
    masks = []
    for v in range(g.n):
        m = 1 << v
        for w in g.adj[v]:
            m |= 1 << w
        masks.append(m)
    return masks


def _greedy_cover(masks: list[int], full: int, start: int) -> list[int]:
    chosen = []
    covered = start
    while covered != full:
        best_v = -1
        best_gain = -1
        for v, m in enumerate(masks):
            gain = (m | covered).bit_count() - covered.bit_count()
            if gain > best_gain:
                best_gain, best_v = gain, v
        chosen.append(best_v)
        covered |= masks[best_v]
    return chosen


def _branch_and_bound(
    g: Graph, masks: list[int], forced: tuple[int, ...]
) -> tuple[int, tuple[int, ...]]:
    """Smallest dominating set containing `forced` (size, one witness)."""
    n = g.n
    full = (1 << n) - 1
    max_cover = max(m.bit_count() for m in masks)
    start = 0
    for v in forced:
        start |= masks[v]
    best_set = list(forced) + _greedy_cover(masks, full, start)
    best = [len(best_set), tuple(best_set)]
    degree_order = sorted(range(n), key=lambda v: (-g.degree(v), v))

    def walk(chosen: list[int], covered: int) -> None:
        if covered == full:
            if len(chosen) < best[0]:
                best[0] = len(chosen)
                best[1] = tuple(chosen)
            return
        uncovered = (~covered) & full
        lower = -((-uncovered.bit_count()) // max_cover)
        if len(chosen) + lower >= best[0]:
            return
        u = next(v for v in degree_order if uncovered >> v & 1)
        candidates = sorted({u, *g.adj[u]})
        for w in candidates:
            chosen.append(w)
            walk(chosen, covered | masks[w])
            chosen.pop()

    walk(list(forced), start)
    return best[0], best[1]


def gamma_exact(
    g: Graph, *, max_n: int = GAMMA_EXACT_DEFAULT_LIMIT
) -> DominationCertificate:
    """Exact gamma by branch and bound; lex-smallest certificate."""
    if g.n > max_n:
        raise ResourceLimitError(
            f"gamma_exact limited to n <= {max_n}, got n={g.n}"
        )
    masks = _closed_neighborhood_masks(g)
    gamma, _ = _branch_and_bound(g, masks, ())
    chosen: list[int] = []
    for v in range(g.n):
        if len(chosen) == gamma:
            break
        size, _ = _branch_and_bound(g, masks, tuple(chosen + [v]))
        if size == gamma:
            chosen.append(v)
    assert len(chosen) == gamma
    supports = set(support_vertices(g))
    return DominationCertificate(
        frozenset(chosen),
        gamma,
        "exhaustive",
        supports_included=bool(supports) and supports <= set(chosen),
    )


def all_minimum_dominating_sets(
    g: Graph, *, max_n: int = 16
) -> Iterator[frozenset[int]]:
    """Every minimum dominating set, in lexicographic order (small n only)."""
    if g.n > max_n:
        raise ResourceLimitError(
            f"exhaustive dominating-set listing limited to n <= {max_n}"
        )
    masks = _closed_neighborhood_masks(g)
    full = (1 << g.n) - 1
    gamma, _ = _branch_and_bound(g, masks, ())
    for combo in combinations(range(g.n), gamma):
        covered = 0
        for v in combo:
            covered |= masks[v]
        if covered == full:
            yield frozenset(combo)


# =====================================================================
# Special facts as checkable procedures
# =====================================================================


def gamma_starlike_formula(n: int, s: int, t: int, h: int) -> int:
    """Closed-form gamma of a spider from its leg counts mod 3.

    s legs of length 2 mod 3, t legs of length 1 mod 3, h legs of positive
    length 0 mod 3, n vertices in total. Raises if no spider has these
    parameters.
    """
    if min(n, s, t, h) < 0 or s + t + h < 1:
        raise InvalidArgumentError(
            f"inconsistent spider parameters n={n}, s={s}, t={t}, h={h}"
        )
    slack = n - 1 - 2 * s - t - 3 * h
    if slack < 0 or slack % 3 != 0:
        raise InvalidArgumentError(
            f"no spider on n={n} vertices has leg classes s={s}, t={t}, h={h}"
        )
    value = (n + s - t + 2) if t >= 1 else (n + s - 1)
    assert value % 3 == 0, "consistent parameters give an integral formula"
    return value // 3


def complement_dominates(t: TreeWitness | Graph, d: Iterable[int]) -> bool:
    """On an even-n tree with gamma = n/2: is V minus d also dominating?

    d must itself be a minimum dominating set; preconditions are enforced
    because the statement is only claimed there.
    """
    witness = as_tree(t)
    g = witness.graph
    dset = frozenset(d)
    if g.n % 2 != 0:
        raise DomainError("complement domination is stated for even n")
    gamma = _tree_gamma_value(witness)
    if gamma != g.n // 2:
        raise DomainError(f"tree has gamma={gamma}, need n/2={g.n // 2}")
    if len(dset) != gamma or not is_dominating_set(g, dset):
        raise DomainError("d must be a minimum dominating set")
    complement = frozenset(range(g.n)) - dset
    return is_dominating_set(g, complement)


def ore_bound_check(g: Graph) -> bool:
    """gamma(g) <= floor(n/2) for graphs without isolated vertices."""
    if any(not nbrs for nbrs in g.adj):
        raise DomainError("Ore bound needs minimum degree >= 1")
    if is_tree(g):
        gamma = tree_domination_number(TreeWitness.from_graph(g))
    else:
        gamma = gamma_exact(g).gamma
    return gamma <= g.n // 2


def tree_has_perfect_matching(t: TreeWitness | Graph) -> bool:
    """Trees have at most one perfect matching; greedy leaf-pairing finds it."""
    g = as_tree(t).graph
    if g.n % 2 != 0:
        return False
    degree = [len(g.adj[v]) for v in range(g.n)]
    alive = [True] * g.n
    stack = [v for v in range(g.n) if degree[v] == 1]
    matched = 0
    while stack:
        u = stack.pop()
        if not alive[u]:
            continue
        if degree[u] == 0:
            return False
        partner = next(w for w in g.adj[u] if alive[w])
        alive[u] = alive[partner] = False
        matched += 2
        for w in g.adj[partner]:
            if alive[w]:
                degree[w] -= 1
                if degree[w] == 1:
                    stack.append(w)
                elif degree[w] == 0:
                    return False
    return matched == g.n


GammaOracle = Callable[[Graph], int]
