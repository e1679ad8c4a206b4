"""Labeled-class scans: membership counts, Rayleigh exclusion, engine parity."""

from fractions import Fraction

import pytest

from specdom import (
    InvalidArgumentError,
    Ordering,
    ResourceLimitError,
    build_corona,
    build_path,
    compare_rho,
    from_graph6,
    is_connected,
    labeled_class_survivors,
    spectral_radius,
)
from specdom.fastscan import edge_pairs, mask_to_graph

from oracles import brute_gamma


def _bar_of(g) -> Fraction:
    return spectral_radius(g, Fraction(1, 1024)).hi


# ---------------------------------------------------------------------
# Mask plumbing
# ---------------------------------------------------------------------


def test_edge_pairs_ordering():
    assert edge_pairs(4) == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def test_mask_to_graph():
    g = mask_to_graph(4, 0b000111)
    assert sorted(g.edges()) == [(0, 1), (0, 2), (0, 3)]
    assert mask_to_graph(3, 0).edge_count == 0


# ---------------------------------------------------------------------
# Class membership
# ---------------------------------------------------------------------


def test_scan_counts_without_exclusion():
    assert labeled_class_survivors(4, 2, None).class_count == 15
    assert labeled_class_survivors(5, 2, None).class_count == 472
    assert labeled_class_survivors(6, 3, None, engine="pure").class_count == 480


def test_scan_members_are_connected_with_right_gamma():
    r = labeled_class_survivors(5, 2, None)
    assert len(r.survivor_masks) == r.class_count
    for mask in r.survivor_masks:
        g = mask_to_graph(5, mask)
        assert is_connected(g)
        assert brute_gamma(g) >= 2


def test_ore_bound_leaves_no_graph_above_half():
    for n in range(2, 7):
        r = labeled_class_survivors(n, n // 2 + 1, None, engine="pure")
        assert r.class_count == 0


# ---------------------------------------------------------------------
# Rayleigh exclusion
# ---------------------------------------------------------------------


def test_exclusion_counts_with_minimizer_bars():
    r4 = labeled_class_survivors(4, 2, _bar_of(build_path(4)))
    assert (r4.class_count, len(r4.survivor_masks)) == (15, 12)
    # The effective bound is the input rounded up onto a 2^13 grid.
    assert r4.bar == Fraction(1657, 1024)
    assert r4.bar >= _bar_of(build_path(4))

    r5 = labeled_class_survivors(5, 2, _bar_of(from_graph6("DkC")))
    assert (r5.class_count, len(r5.survivor_masks)) == (472, 60)

    r6 = labeled_class_survivors(
        6, 3, _bar_of(build_corona(build_path(3))), engine="pure"
    )
    assert (r6.class_count, len(r6.survivor_masks)) == (480, 360)


def test_exclusion_is_sound():
    bar = _bar_of(from_graph6("DkC"))
    kept = set(labeled_class_survivors(5, 2, bar).survivor_masks)
    everyone = set(labeled_class_survivors(5, 2, None).survivor_masks)
    assert kept <= everyone
    reference = from_graph6("DkC")
    for mask in everyone - kept:
        g = mask_to_graph(5, mask)
        assert compare_rho(g, reference) == Ordering.Greater


def test_exclusion_never_drops_the_minimizer():
    bar = _bar_of(from_graph6("DkC"))
    kept = labeled_class_survivors(5, 2, bar).survivor_masks
    assert any(
        compare_rho(mask_to_graph(5, m), from_graph6("DkC")) == Ordering.Equal
        for m in kept
    )


# ---------------------------------------------------------------------
# Engines
# ---------------------------------------------------------------------


@pytest.mark.slow
def test_numba_engine_matches_pure_engine():
    for n, s, bar in [(6, 3, None), (6, 3, _bar_of(build_corona(build_path(3))))]:
        pure = labeled_class_survivors(n, s, bar, engine="pure")
        jit = labeled_class_survivors(n, s, bar, engine="numba")
        assert pure.class_count == jit.class_count
        assert pure.survivor_masks == jit.survivor_masks


@pytest.mark.slow
def test_numba_engine_n7_frozen_count():
    r = labeled_class_survivors(7, 3, None)
    assert r.class_count == 102210
    assert labeled_class_survivors(7, 4, None).class_count == 0


# ---------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------


def test_scan_validation():
    pytest.raises(ResourceLimitError, lambda: labeled_class_survivors(9, 4, None))
    pytest.raises(ResourceLimitError, lambda: labeled_class_survivors(0, 1, None))
    pytest.raises(InvalidArgumentError, lambda: labeled_class_survivors(4, 0, None))
    pytest.raises(InvalidArgumentError, lambda: labeled_class_survivors(4, 5, None))
    pytest.raises(
        InvalidArgumentError, lambda: labeled_class_survivors(4, 2, None, engine="fast")
    )
    pytest.raises(
        InvalidArgumentError, lambda: labeled_class_survivors(4, 2, Fraction(4))
    )
