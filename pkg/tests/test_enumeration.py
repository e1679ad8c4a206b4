"""Tree enumeration, class filtering, and certified minimizer search."""

import pytest

from specdom import (
    DomainError,
    Graph,
    InvalidArgumentError,
    Ordering,
    ResourceLimitError,
    RunConfig,
    TreeClassFilter,
    TreeWitness,
    build_corona,
    build_path,
    canonical_graph6,
    compare_rho,
    connected_graphs_labeled,
    filter_class,
    find_minimizer,
    free_trees,
    from_graph6,
    is_connected,
    tree_domination_number,
)
from specdom.enumeration import level_sequence_of
from specdom.isomorphism import tree_canonical_form

from oracles import brute_gamma, prufer_free_tree_count

# One entry per tree order starting at n = 1.
FREE_TREE_COUNTS = (1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741)


# ---------------------------------------------------------------------
# Free tree generation
# ---------------------------------------------------------------------


def test_free_tree_counts():
    for n, expect in enumerate(FREE_TREE_COUNTS[:12], start=1):
        assert sum(1 for _ in free_trees(n)) == expect


@pytest.mark.slow
def test_free_tree_counts_large():
    for n, expect in enumerate(FREE_TREE_COUNTS, start=1):
        assert sum(1 for _ in free_trees(n)) == expect
    assert sum(1 for _ in free_trees(17)) == 48629


def test_free_tree_counts_match_prufer_oracle():
    for n in range(1, 9):
        assert sum(1 for _ in free_trees(n)) == prufer_free_tree_count(n)


def test_enumerated_trees_are_trees_and_pairwise_distinct():
    for n in range(1, 11):
        forms = set()
        for w in free_trees(n):
            g = w.graph
            assert g.n == n and g.edge_count == n - 1 and is_connected(g)
            forms.add(tree_canonical_form(g))
        assert len(forms) == FREE_TREE_COUNTS[n - 1]


def test_level_sequences_are_preorder_consistent():
    assert [level_sequence_of(w) for w in free_trees(4)] == [
        (0, 1, 2, 1),
        (0, 1, 1, 1),
    ]
    assert [level_sequence_of(w) for w in free_trees(5)] == [
        (0, 1, 2, 1, 2),
        (0, 1, 2, 1, 1),
        (0, 1, 1, 1, 1),
    ]


def test_resume_after_picks_up_mid_stream():
    full = [level_sequence_of(w) for w in free_trees(9)]
    rest = [level_sequence_of(w) for w in free_trees(9, resume_after=full[19])]
    assert rest == full[20:]
    assert list(free_trees(9, resume_after=full[-1])) == []


def test_free_trees_resource_limit():
    pytest.raises(ResourceLimitError, lambda: next(free_trees(19)))
    small = RunConfig(max_tree_n=5)
    pytest.raises(ResourceLimitError, lambda: next(free_trees(6, config=small)))


def test_tree_witness_round_trip():
    g = build_path(5)
    w = TreeWitness.from_graph(g)
    assert w.graph.n == 5
    assert level_sequence_of(w)[0] == 0


# ---------------------------------------------------------------------
# Labeled connected graphs
# ---------------------------------------------------------------------


def test_connected_labeled_counts():
    expected = {1: 1, 2: 1, 3: 4, 4: 38, 5: 728}
    for n, count in expected.items():
        graphs = list(connected_graphs_labeled(n))
        assert len(graphs) == count
        assert all(is_connected(g) for g in graphs)


def test_connected_labeled_resource_limit():
    pytest.raises(ResourceLimitError, lambda: next(connected_graphs_labeled(9)))


# ---------------------------------------------------------------------
# Class filters
# ---------------------------------------------------------------------


def test_filter_validation():
    pytest.raises(InvalidArgumentError, lambda: TreeClassFilter(gamma_eq=-1))
    pytest.raises(InvalidArgumentError, lambda: TreeClassFilter(diameter_le=-2))


def test_filter_class_counts():
    cases = [
        (9, TreeClassFilter(gamma_eq=4, leaf_mult_le=1), 7),
        (11, TreeClassFilter(gamma_eq=5, leaf_mult_le=1), 18),
        (8, TreeClassFilter(gamma_eq=4), 2),
        (10, TreeClassFilter(gamma_eq=5), 3),
        (12, TreeClassFilter(gamma_eq=6), 6),
        (7, TreeClassFilter(caterpillar_only=True), 10),
        (7, TreeClassFilter(diameter_eq=6), 1),
        (7, TreeClassFilter(diameter_le=3), 3),
        (7, TreeClassFilter(max_degree_le=2), 1),
    ]
    for n, f, expect in cases:
        assert sum(1 for _ in filter_class(free_trees(n), f)) == expect


def test_filter_class_gamma_agrees_with_brute_force():
    for n in range(2, 9):
        expect = [
            w for w in free_trees(n) if brute_gamma(w.graph) == n // 2
        ]
        got = list(filter_class(free_trees(n), TreeClassFilter(gamma_eq=n // 2)))
        assert [level_sequence_of(w) for w in got] == [
            level_sequence_of(w) for w in expect
        ]


def test_filter_class_accepts_plain_graphs():
    graphs = [build_path(6), build_corona(build_path(3))]
    out = list(filter_class(graphs, TreeClassFilter(gamma_eq=3)))
    # gamma(P6) = 2, so only the corona passes; items stream through untouched.
    assert out == [graphs[1]]


# ---------------------------------------------------------------------
# Minimizer search
# ---------------------------------------------------------------------


def _odd_class_9():
    return filter_class(free_trees(9), TreeClassFilter(gamma_eq=4))


def test_find_minimizer_frozen_values():
    res = find_minimizer(_odd_class_9())
    assert res.minimizers == ("HhE?GCC",)
    assert res.class_size == 11
    assert res.rho.exact_value == "2/1"
    assert res.to_json()["rho"] == {"lo": "2/1", "hi": "2/1"}

    res8 = find_minimizer(filter_class(free_trees(8), TreeClassFilter(gamma_eq=4)))
    assert res8.minimizers == (canonical_graph6(build_corona(build_path(4))),)
    assert res8.class_size == 2


def test_find_minimizer_is_order_independent():
    forward = find_minimizer(_odd_class_9())
    backward = find_minimizer(list(_odd_class_9())[::-1])
    assert forward.minimizers == backward.minimizers
    assert forward.rho.to_json() == backward.rho.to_json()


def test_find_minimizer_parallel_matches_sequential():
    seq = find_minimizer(_odd_class_9(), config=RunConfig(workers=1))
    par = find_minimizer(_odd_class_9(), config=RunConfig(workers=2))
    assert seq.minimizers == par.minimizers
    assert seq.class_size == par.class_size
    assert seq.rho.to_json() == par.rho.to_json()


def test_find_minimizer_certifies_strict_minimum():
    res = find_minimizer(_odd_class_9())
    winner = from_graph6(res.minimizers[0])
    for w in _odd_class_9():
        if canonical_graph6(w.graph) not in res.minimizers:
            assert compare_rho(w.graph, winner) == Ordering.Greater


def test_find_minimizer_rejects_empty_class():
    pytest.raises(DomainError, lambda: find_minimizer([]))


def test_find_minimizer_reports_ties():
    # A class with two isomorphic labelings collapses to one minimizer.
    twin = [build_path(4), Graph(4, [(3, 2), (2, 0), (0, 1)])]
    res = find_minimizer(twin)
    assert len(res.minimizers) == 1
    assert res.class_size == 2
