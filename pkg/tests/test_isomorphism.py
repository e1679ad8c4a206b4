"""Centroids, canonical tree forms, and exact isomorphism checks."""

import random

import pytest
from hypothesis import given, strategies as st

from specdom import (
    Graph,
    InvalidArgumentError,
    build_cycle,
    build_complete,
    build_H,
    build_path,
    build_star,
    build_T,
    canonical_graph6,
    free_trees,
    from_graph6,
    is_isomorphic,
    to_graph6,
    trees_isomorphic,
)
from specdom.isomorphism import (
    canonical_level_sequence,
    canonical_relabel_tree,
    tree_canonical_form,
    tree_centroids,
)

from oracles import ahu_code, nx_isomorphic, prufer_decode


def _relabel(g: Graph, perm: list[int]) -> Graph:
    return Graph(g.n, ((perm[u], perm[v]) for u, v in g.edges()))


def _random_tree(rng: random.Random, n: int) -> Graph:
    if n <= 2:
        return build_path(n)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return Graph(n, prufer_decode(seq, n))


# ---------------------------------------------------------------------
# Centroids and level sequences
# ---------------------------------------------------------------------


def test_tree_centroids_knowns():
    assert tree_centroids(build_path(1).adj) == (0,)
    assert tree_centroids(build_path(2).adj) == (0, 1)
    assert tree_centroids(build_path(4).adj) == (1, 2)
    assert tree_centroids(build_path(5).adj) == (2,)
    assert tree_centroids(build_star(6).adj) == (0,)
    pytest.raises(InvalidArgumentError, lambda: tree_centroids((), 0))


def test_canonical_level_sequence_path():
    p3 = build_path(3)
    assert canonical_level_sequence(p3.adj, 1) == (0, 1, 1)
    assert canonical_level_sequence(p3.adj, 0) == (0, 1, 2)
    assert tree_canonical_form(p3) == (0, 1, 1)
    assert tree_canonical_form(build_star(5)) == (0, 1, 1, 1, 1)


def test_canonical_form_requires_tree():
    pytest.raises(InvalidArgumentError, lambda: tree_canonical_form(build_cycle(4)))
    pytest.raises(
        InvalidArgumentError, lambda: canonical_relabel_tree(build_cycle(4))
    )


def test_canonical_form_matches_independent_ahu():
    rng = random.Random(411)
    for _ in range(60):
        n = rng.randrange(2, 12)
        t1 = _random_tree(rng, n)
        t2 = _random_tree(rng, n)
        ours = tree_canonical_form(t1) == tree_canonical_form(t2)
        theirs = ahu_code(t1.n, t1.edges()) == ahu_code(t2.n, t2.edges())
        assert ours == theirs


# ---------------------------------------------------------------------
# Relabeling invariance
# ---------------------------------------------------------------------


def test_canonical_relabel_collapses_isomorphic_trees():
    rng = random.Random(412)
    for _ in range(40):
        n = rng.randrange(2, 13)
        t = _random_tree(rng, n)
        perm = list(range(n))
        rng.shuffle(perm)
        shuffled = _relabel(t, perm)
        assert trees_isomorphic(t, shuffled)
        assert to_graph6(canonical_relabel_tree(t)) == to_graph6(
            canonical_relabel_tree(shuffled)
        )
        assert canonical_graph6(t) == canonical_graph6(shuffled)


def test_canonical_relabel_idempotent():
    t = build_T(8, 3, 2)
    once = canonical_relabel_tree(t)
    twice = canonical_relabel_tree(once)
    assert to_graph6(once) == to_graph6(twice)


@given(st.integers(2, 10), st.randoms(use_true_random=False))
def test_relabeled_tree_stays_isomorphic(n, rng):
    t = _random_tree(rng, n)
    perm = list(range(n))
    rng.shuffle(perm)
    assert trees_isomorphic(t, _relabel(t, perm))


# ---------------------------------------------------------------------
# Pairwise distinctness over full enumeration
# ---------------------------------------------------------------------


def test_canonical_forms_distinct_across_classes():
    for n in range(1, 9):
        forms = [tree_canonical_form(w.graph) for w in free_trees(n)]
        assert len(forms) == len(set(forms))
        codes = [ahu_code(w.graph.n, w.graph.edges()) for w in free_trees(n)]
        assert len(codes) == len(set(codes))


# ---------------------------------------------------------------------
# General graphs
# ---------------------------------------------------------------------


def test_is_isomorphic_small_knowns():
    assert is_isomorphic(build_cycle(4), _relabel(build_cycle(4), [2, 0, 3, 1]))
    assert not is_isomorphic(build_cycle(4), build_path(4))
    assert not is_isomorphic(build_cycle(4), build_complete(4))
    # Same degree sequence, different structure: one 6-cycle vs two triangles.
    two_triangles = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not is_isomorphic(build_cycle(6), two_triangles)


def test_is_isomorphic_matches_networkx():
    rng = random.Random(413)
    for _ in range(60):
        n = rng.randrange(2, 8)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        g1 = Graph(n, [e for e in pairs if rng.random() < 0.5])
        g2 = Graph(n, [e for e in pairs if rng.random() < 0.5])
        assert is_isomorphic(g1, g2) == nx_isomorphic(g1, g2)


def test_cospectral_trees_are_not_isomorphic():
    assert not trees_isomorphic(build_H(16), build_H(18))
    assert not is_isomorphic(build_H(16), build_H(18))


def test_general_graph_limits():
    big = build_cycle(13)
    pytest.raises(InvalidArgumentError, lambda: is_isomorphic(big, build_cycle(13)))
    pytest.raises(InvalidArgumentError, lambda: canonical_graph6(build_cycle(9)))


def test_canonical_graph6_general_invariance():
    rng = random.Random(414)
    for _ in range(20):
        n = rng.randrange(2, 7)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        g = Graph(n, [e for e in pairs if rng.random() < 0.6])
        perm = list(range(n))
        rng.shuffle(perm)
        s = canonical_graph6(g)
        assert s == canonical_graph6(_relabel(g, perm))
        assert is_isomorphic(from_graph6(s), g)
