"""Characteristic polynomials, certified radius enclosures, trichotomy."""

import random
from fractions import Fraction

import pytest

from specdom import (
    DomainError,
    Graph,
    IntPolynomial,
    InvalidArgumentError,
    Ordering,
    RadiusEnclosure,
    build_complete,
    build_corona,
    build_cycle,
    build_H,
    build_path,
    build_S10,
    build_star,
    build_T,
    char_poly,
    char_poly_tree,
    compare_rho,
    corona_poly,
    corona_radius,
    refine_enclosure,
    spectral_radius,
)
from specdom.spectral import claim2_difference, claim2_rhs, radius_from_poly
from specdom.enumeration import free_trees

from oracles import char_poly_coeffs, eig_radius, prufer_decode

TIGHT = Fraction(1, 10**9)


def _random_connected(rng: random.Random, n: int, extra: int) -> Graph:
    edges = set(prufer_decode([rng.randrange(n) for _ in range(n - 2)], n)) if n > 2 else {
        (0, 1)
    } if n == 2 else set()
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    for e in pairs:
        if len(edges) >= n - 1 + extra:
            break
        edges.add((min(e), max(e)))
    return Graph(n, edges)


# ---------------------------------------------------------------------
# Characteristic polynomial
# ---------------------------------------------------------------------


def test_char_poly_knowns():
    assert char_poly(Graph(1)).coeffs == (0, 1)  # x
    assert char_poly(build_path(2)).coeffs == (-1, 0, 1)  # x^2 - 1
    assert char_poly(build_path(3)).coeffs == (0, -2, 0, 1)  # x^3 - 2x
    assert char_poly(build_cycle(3)).coeffs == (-2, -3, 0, 1)  # x^3 - 3x - 2
    assert char_poly(build_star(4)).coeffs == (0, 0, -3, 0, 1)  # x^4 - 3x^2


def test_char_poly_coefficient_invariants():
    rng = random.Random(520)
    for _ in range(20):
        n = rng.randrange(2, 8)
        g = _random_connected(rng, n, rng.randrange(0, 4))
        p = char_poly(g)
        assert p.degree == n and p.is_monic()
        assert p.coeffs[n - 1] == 0
        assert p.coeffs[n - 2] == -g.edge_count


def test_char_poly_matches_numpy():
    rng = random.Random(521)
    for _ in range(15):
        n = rng.randrange(2, 8)
        g = _random_connected(rng, n, rng.randrange(0, 5))
        assert list(char_poly(g).coeffs) == char_poly_coeffs(g)


def test_tree_recurrence_agrees_with_determinant():
    for n in range(1, 9):
        for w in free_trees(n):
            assert char_poly_tree(w) == char_poly(w.graph)


def test_char_poly_tree_rejects_non_trees():
    pytest.raises(InvalidArgumentError, lambda: char_poly_tree(build_cycle(4)))


# ---------------------------------------------------------------------
# Enclosure container
# ---------------------------------------------------------------------


def test_enclosure_validation_and_views():
    p = IntPolynomial((-2, 0, 1))
    enc = RadiusEnclosure(Fraction(1), Fraction(3, 2), p)
    assert enc.width == Fraction(1, 2)
    assert enc.midpoint == Fraction(5, 4)
    assert not enc.is_exact
    assert enc.as_float() == 1.25
    assert enc.to_json() == {"lo": "1/1", "hi": "3/2"}
    pytest.raises(
        InvalidArgumentError, lambda: RadiusEnclosure(Fraction(2), Fraction(1), p)
    )
    pytest.raises(InvalidArgumentError, lambda: RadiusEnclosure(1.0, Fraction(1), p))


# ---------------------------------------------------------------------
# Radius enclosures
# ---------------------------------------------------------------------


def test_radius_integer_knowns():
    for g, expect in [
        (build_path(2), "1/1"),
        (build_cycle(4), "2/1"),
        (build_complete(5), "4/1"),
        (build_star(5), "2/1"),
        (build_H(7), "2/1"),
    ]:
        enc = spectral_radius(g)
        assert enc.exact_value == expect
        assert enc.is_exact


def test_radius_of_single_vertex_is_zero():
    enc = spectral_radius(Graph(1))
    assert enc.exact_value == "0" and enc.lo == 0


def test_radius_s10_brackets_one_plus_sqrt2():
    enc = refine_enclosure(spectral_radius(build_S10()), TIGHT)
    # 1 + sqrt(2): certify lo < 1+sqrt(2) < hi without floats.
    assert (enc.lo - 1) ** 2 < 2 < (enc.hi - 1) ** 2
    assert enc.width <= TIGHT


def test_radius_matches_numpy_eigenvalues():
    rng = random.Random(522)
    for _ in range(15):
        n = rng.randrange(2, 9)
        g = _random_connected(rng, n, rng.randrange(0, 4))
        enc = spectral_radius(g, Fraction(1, 10**8))
        assert abs(enc.as_float() - eig_radius(g)) < 1e-6


def test_radius_input_validation():
    two_parts = Graph(4, [(0, 1), (2, 3)])
    pytest.raises(DomainError, lambda: spectral_radius(two_parts))
    pytest.raises(InvalidArgumentError, lambda: spectral_radius(build_path(3), 0))
    p = char_poly(build_path(3))
    pytest.raises(InvalidArgumentError, lambda: radius_from_poly(p, 0))


def test_refine_enclosure():
    enc = spectral_radius(build_T(8, 3, 2), Fraction(1, 4))
    fine = refine_enclosure(enc, TIGHT)
    assert fine.width <= TIGHT
    assert enc.lo <= fine.lo and fine.hi <= enc.hi
    assert refine_enclosure(fine, Fraction(1)) is fine
    exact = spectral_radius(build_path(2))
    assert refine_enclosure(exact, TIGHT) is exact
    pytest.raises(InvalidArgumentError, lambda: refine_enclosure(enc, 0))


def test_frozen_midpoints():
    t = spectral_radius(build_T(8, 3, 2), Fraction(1, 10**8))
    assert abs(t.as_float() - 2.1357792047783732) < 1e-7
    c = spectral_radius(build_corona(build_path(4)), Fraction(1, 10**8))
    assert abs(c.as_float() - 2.0952939866110682) < 1e-7


# ---------------------------------------------------------------------
# Exact trichotomy
# ---------------------------------------------------------------------


def test_compare_rho_knowns():
    assert compare_rho(build_path(4), build_path(5)) == Ordering.Less
    assert compare_rho(build_path(5), build_path(4)) == Ordering.Greater
    shuffled_p5 = Graph(5, [(3, 1), (1, 4), (4, 0), (0, 2)])
    assert compare_rho(build_path(5), shuffled_p5) == Ordering.Equal
    # Equal radii without isomorphism: a star and a cycle share rho = 2.
    assert compare_rho(build_star(5), build_cycle(4)) == Ordering.Equal


def test_compare_rho_cospectral_pair():
    h16, h18 = build_H(16), build_H(18)
    assert char_poly(h16) == char_poly(h18)
    assert compare_rho(h16, h18) == Ordering.Equal


def test_compare_rho_rejects_disconnected():
    two_parts = Graph(4, [(0, 1), (2, 3)])
    pytest.raises(DomainError, lambda: compare_rho(two_parts, build_path(4)))


def test_compare_rho_agrees_with_numpy():
    rng = random.Random(523)
    for _ in range(20):
        n = rng.randrange(3, 9)
        g1 = _random_connected(rng, n, rng.randrange(0, 3))
        g2 = _random_connected(rng, n, rng.randrange(0, 3))
        got = compare_rho(g1, g2)
        gap = eig_radius(g1) - eig_radius(g2)
        if got == Ordering.Less:
            assert gap < 1e-9
        elif got == Ordering.Greater:
            assert gap > -1e-9
        else:
            assert abs(gap) < 1e-9


# ---------------------------------------------------------------------
# Corona radius
# ---------------------------------------------------------------------


def test_corona_poly_is_the_corona_char_poly():
    rng = random.Random(524)
    for _ in range(10):
        n = rng.randrange(1, 6)
        g = _random_connected(rng, n, rng.randrange(0, 3)) if n > 1 else Graph(1)
        assert corona_poly(char_poly(g)) == char_poly(build_corona(g))
    pytest.raises(InvalidArgumentError, lambda: corona_poly(IntPolynomial.zero()))


def test_corona_radius_matches_direct_computation():
    g = build_path(4)
    mapped = corona_radius(spectral_radius(g, Fraction(1, 10**6)))
    direct = spectral_radius(build_corona(g), Fraction(1, 10**6))
    assert mapped.lo <= direct.hi and direct.lo <= mapped.hi
    tight_mapped = refine_enclosure(mapped, TIGHT)
    tight_direct = refine_enclosure(direct, TIGHT)
    assert abs(tight_mapped.midpoint - tight_direct.midpoint) <= 2 * TIGHT


def test_corona_radius_exact_branch():
    # rho(K1) = 0 maps to (0 + sqrt(4))/2 = 1, and corona(K1) is P2.
    enc = corona_radius(spectral_radius(Graph(1)))
    assert enc.exact_value == "1/1"
    # rho(C4) = 2 maps to 1 + sqrt(2), which is irrational: interval branch.
    silver = corona_radius(spectral_radius(build_cycle(4)))
    assert silver.exact_value is None
    assert (silver.lo - 1) ** 2 < 2 < (silver.hi - 1) ** 2


def test_corona_radius_rejects_negative_interval():
    p = IntPolynomial((-2, 0, 1))
    enc = RadiusEnclosure(Fraction(-1), Fraction(1), p)
    pytest.raises(InvalidArgumentError, lambda: corona_radius(enc))


# ---------------------------------------------------------------------
# Caterpillar difference identity
# ---------------------------------------------------------------------


def test_caterpillar_difference_identity_exact():
    for d in range(4, 9):
        for i in range(1, d + 1):
            for j in range(1, i + 1):
                if i + j > d + 1:
                    continue
                assert claim2_difference(d, i, j) == claim2_rhs(d, i, j)


def test_caterpillar_identity_rejects_bad_params():
    pytest.raises(InvalidArgumentError, lambda: claim2_difference(5, 3, 0))
    pytest.raises(InvalidArgumentError, lambda: claim2_difference(5, 2, 3))
    pytest.raises(InvalidArgumentError, lambda: claim2_difference(5, 6, 1))
    pytest.raises(InvalidArgumentError, lambda: claim2_difference(4, 4, 2))
