"""Characteristic polynomials and certified spectral-radius arithmetic.

The spectral radius rho(G) is the largest eigenvalue of the adjacency
matrix, i.e. the largest real root of f(G,x) = det(xI - A(G)). Everything
here stays exact: polynomials have integer coefficients, enclosures have
rational endpoints certified by Sturm counts, and ordering decisions never
touch floating point.

Two independent routes produce f(G,x):

  * char_poly      -- fraction-free integer determinants of (kI - A) at
                      k = 0..n, interpolated exactly;
  * char_poly_tree -- the leaf-deletion recurrence
                      f(T,x) = x f(T-u,x) - f(T-u-v,x) for a leaf u with
                      neighbor v, memoized over canonical subtree shapes.

They share no code, so each serves as an oracle for the other.

Comparisons use the fact that distinct algebraic numbers have positive
separation: refine both enclosures until disjoint, or certify equality via
a common root of gcd(f1, f2) inside the overlap.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import isqrt

from .errors import DomainError, InvalidArgumentError
from .graphs import Graph, TreeWitness, as_tree, is_connected, max_degree
from .isomorphism import canonical_level_sequence, tree_centroids
from .polynomials import (
    IntPolynomial,
    Rational,
    cauchy_root_bound,
    frac_str,
    poly_gcd,
    squarefree_part,
    sturm_count,
)

DEFAULT_TOL = Fraction(1, 10**6)


class Ordering(Enum):
    """Trichotomy result for spectral-radius comparisons."""

    Less = "less"
    Equal = "equal"
    Greater = "greater"


@dataclass(frozen=True)
class RadiusEnclosure:
    """Certified interval lo <= rho <= hi around a largest real root.

    Invariants: rho is the largest real root of source_poly; when
    width > 0 the half-open interval (lo, hi] contains exactly one
    distinct root of source_poly (Sturm-counted). exact_value, when set,
    is the exact rational value of rho as a "p/q" string.
    """

    lo: Fraction
    hi: Fraction
    source_poly: IntPolynomial
    exact_value: str | None = None

    def __post_init__(self) -> None:
        if not (isinstance(self.lo, Fraction) and isinstance(self.hi, Fraction)):
            raise InvalidArgumentError("enclosure endpoints must be Fractions")
        if self.lo > self.hi:
            raise InvalidArgumentError(f"empty enclosure [{self.lo}, {self.hi}]")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def as_float(self) -> float:
        return float(self.midpoint)

    def to_json(self) -> dict[str, str]:
        return {"lo": frac_str(self.lo), "hi": frac_str(self.hi)}


# =====================================================================
# Characteristic polynomial, determinant route
# =====================================================================


def _det_bareiss(m: list[list[int]]) -> int:
    """Exact determinant by fraction-free Gaussian elimination (in place)."""
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            row_k = m[k]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def char_poly(g: Graph) -> IntPolynomial:
    """Exact monic characteristic polynomial det(xI - A(g)).

    Evaluates the determinant at x = 0..n by fraction-free elimination and
    interpolates; exactness is asserted (integer coefficients, monic).
    """
    n = g.n
    values = []
    for k in range(n + 1):
        m = [[0] * n for _ in range(n)]
        for v in range(n):
            m[v][v] = k
            for w in g.adj[v]:
                m[v][w] = -1
        values.append(_det_bareiss(m))
    coeffs = _interpolate_integer(values)
    poly = IntPolynomial(coeffs)
    assert poly.degree == n and poly.is_monic(), "char poly must be monic degree n"
    return poly


def _interpolate_integer(values: list[int]) -> list[int]:
    """Coefficients of the degree-(len-1) polynomial with p(k) = values[k]."""
    n = len(values) - 1
    acc = [Fraction(0)] * (n + 1)
    for i, v in enumerate(values):
        if v == 0:
            continue
        # Basis polynomial prod_{j != i} (x - j), built as integer coeffs.
        basis = [1]
        denom = 1
        for j in range(n + 1):
            if j == i:
                continue
            denom *= i - j
            basis = [0] + basis
            for k in range(len(basis) - 1):
                basis[k] -= j * basis[k + 1]
        scale = Fraction(v, denom)
        for k, b in enumerate(basis):
            acc[k] += b * scale
    assert all(c.denominator == 1 for c in acc), "interpolation must be integral"
    return [int(c) for c in acc]


# =====================================================================
# Characteristic polynomial, tree recurrence route
# =====================================================================

# Shared memo over canonical subtree shapes. Inserts are idempotent (the
# value is determined by the key), so concurrent duplicate computation is
# harmless.
_TREE_POLY_MEMO: dict[tuple[int, ...], IntPolynomial] = {}

_X = IntPolynomial((0, 1))
_ONE = IntPolynomial((1,))


def _induced_adjacency(
    adj: tuple[tuple[int, ...], ...], comp: list[int]
) -> tuple[tuple[int, ...], ...]:
    index = {v: k for k, v in enumerate(comp)}
    return tuple(
        tuple(index[w] for w in adj[v] if w in index) for v in comp
    )


def _components(
    adj: tuple[tuple[int, ...], ...], alive: set[int]
) -> list[list[int]]:
    seen: set[int] = set()
    out = []
    for s in sorted(alive):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        stack = [s]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w in alive and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comp.sort()
        out.append(comp)
    return out


def _tree_poly(adj: tuple[tuple[int, ...], ...]) -> IntPolynomial:
    """f(T,x) for a connected tree given as local adjacency lists."""
    m = len(adj)
    if m == 1:
        return _X
    key = max(
        canonical_level_sequence(adj, c) for c in tree_centroids(adj, m)
    )
    cached = _TREE_POLY_MEMO.get(key)
    if cached is not None:
        return cached
    u = next(v for v in range(m) if len(adj[v]) == 1)
    v = adj[u][0]
    alive = set(range(m))
    alive.discard(u)
    f_minus_u = _tree_poly(_induced_adjacency(adj, _components(adj, alive)[0]))
    alive.discard(v)
    f_minus_uv = _ONE
    for comp in _components(adj, alive):
        f_minus_uv = f_minus_uv * _tree_poly(_induced_adjacency(adj, comp))
    result = _X * f_minus_u - f_minus_uv
    _TREE_POLY_MEMO[key] = result
    return result


def char_poly_tree(t: TreeWitness | Graph) -> IntPolynomial:
    """f(T,x) via the leaf-deletion recurrence; independent of char_poly."""
    witness = as_tree(t)
    return _tree_poly(witness.graph.adj)


# =====================================================================
# Root isolation
# =====================================================================


def _isolate_largest(
    p: IntPolynomial,
    lo: Fraction,
    hi: Fraction,
    tol: Fraction,
) -> tuple[Fraction, Fraction]:
    """Shrink (lo, hi] around the largest real root of p.

    Requires: the largest real root lies in (lo, hi]. Returns an interval
    of width <= tol whose half-open form contains exactly one distinct
    root. Test points are kept off the roots of p, so p(lo') != 0 for
    every returned lo' > lo.
    """
    sf = squarefree_part(p)
    count = sturm_count(sf, lo, hi)
    assert count >= 1, "bracket must contain the root"
    while count > 1 or hi - lo > tol:
        mid = (lo + hi) / 2
        while sf.sign_at(mid) == 0:
            mid = (mid + hi) / 2
        upper = sturm_count(sf, mid, hi)
        if upper >= 1:
            lo, count = mid, upper
        else:
            hi = mid
    return lo, hi


def radius_from_poly(
    p: IntPolynomial, delta: int, tol: Rational = DEFAULT_TOL
) -> RadiusEnclosure:
    """Enclosure of the largest real root of a connected graph's char poly.

    delta is the graph's maximum degree, so the root lies in (0, delta]
    (degree >= 1 assumed, i.e. the graph has an edge). Integer roots are
    detected exactly: the polynomial is monic, so any rational root is an
    integer.
    """
    tol = Fraction(tol)
    if tol <= 0:
        raise InvalidArgumentError(f"tol must be positive, got {tol}")
    if delta < 1:
        raise InvalidArgumentError("radius_from_poly needs max degree >= 1")
    sf = squarefree_part(p)
    top = Fraction(delta + 1)
    for d in range(delta, 0, -1):
        if p(d) == 0:
            if sturm_count(sf, Fraction(d), top) == 0:
                r = Fraction(d)
                return RadiusEnclosure(r, r, p, exact_value=frac_str(r))
            break
    lo, hi = _isolate_largest(p, Fraction(0), Fraction(delta), tol)
    return RadiusEnclosure(lo, hi, p)


def spectral_radius(g: Graph, tol: Rational = DEFAULT_TOL) -> RadiusEnclosure:
    """Certified enclosure of rho(g) with width <= tol.

    Bisection over the initial bracket (0, max_degree], steered by exact
    Sturm counts.
    """
    if Fraction(tol) <= 0:
        raise InvalidArgumentError(f"tol must be positive, got {tol}")
    if not is_connected(g):
        raise DomainError("spectral_radius needs a connected graph")
    p = char_poly(g)
    if g.n == 1:
        zero = Fraction(0)
        return RadiusEnclosure(zero, zero, p, exact_value="0")
    return radius_from_poly(p, max_degree(g), tol)


def refine_enclosure(enc: RadiusEnclosure, tol: Rational) -> RadiusEnclosure:
    """Narrow an enclosure to width <= tol (no-op when already tight)."""
    tol = Fraction(tol)
    if tol <= 0:
        raise InvalidArgumentError(f"tol must be positive, got {tol}")
    if enc.is_exact or enc.width <= tol:
        return enc
    lo, hi = _isolate_largest(enc.source_poly, enc.lo, enc.hi, tol)
    return RadiusEnclosure(lo, hi, enc.source_poly, enc.exact_value)


# =====================================================================
# Exact trichotomy
# =====================================================================


def _compare_exact_vs_poly(r: Fraction, p: IntPolynomial) -> Ordering:
    """Order r against the largest real root of p (Less means r is smaller)."""
    sf = squarefree_part(p)
    bound = cauchy_root_bound(p)
    above = sturm_count(sf, r, bound) if r < bound else 0
    if above >= 1:
        return Ordering.Less
    if sf.sign_at(r) == 0:
        return Ordering.Equal
    return Ordering.Greater


def compare_enclosures(e1: RadiusEnclosure, e2: RadiusEnclosure) -> Ordering:
    """Exact order of the two enclosed largest roots."""
    if e1.source_poly == e2.source_poly:
        return Ordering.Equal
    if e1.is_exact and e2.is_exact:
        if e1.lo == e2.lo:
            return Ordering.Equal
        return Ordering.Less if e1.lo < e2.lo else Ordering.Greater
    if e1.is_exact:
        return _compare_exact_vs_poly(e1.lo, e2.source_poly)
    if e2.is_exact:
        flipped = _compare_exact_vs_poly(e2.lo, e1.source_poly)
        if flipped == Ordering.Less:
            return Ordering.Greater
        if flipped == Ordering.Greater:
            return Ordering.Less
        return Ordering.Equal
    sf1 = squarefree_part(e1.source_poly)
    sf2 = squarefree_part(e2.source_poly)
    shared = poly_gcd(sf1, sf2)
    while True:
        if e1.hi < e2.lo:
            return Ordering.Less
        if e2.hi < e1.lo:
            return Ordering.Greater
        if shared.degree >= 1:
            ov_lo = max(e1.lo, e2.lo)
            ov_hi = min(e1.hi, e2.hi)
            if ov_lo < ov_hi and sturm_count(shared, ov_lo, ov_hi) >= 1:
                # That common root sits inside both half-open enclosures,
                # each of which holds exactly one root of its own
                # polynomial, so it is both largest roots at once.
                return Ordering.Equal
        e1 = refine_enclosure(e1, e1.width / 4)
        e2 = refine_enclosure(e2, e2.width / 4)


def compare_rho(g1: Graph, g2: Graph) -> Ordering:
    """Exact trichotomy on rho(g1) vs rho(g2); never consults tolerances."""
    for g in (g1, g2):
        if not is_connected(g):
            raise DomainError("compare_rho needs connected graphs")
    coarse = Fraction(1, 16)
    return compare_enclosures(
        spectral_radius(g1, coarse), spectral_radius(g2, coarse)
    )


# =====================================================================
# Corona radius
# =====================================================================


def corona_poly(p: IntPolynomial) -> IntPolynomial:
    """y^n f(G, y - 1/y), the characteristic polynomial of G composed with
    a pendant vertex at every vertex (G corona K1)."""
    if p.is_zero():
        raise InvalidArgumentError("corona_poly needs a nonzero polynomial")
    n = p.degree
    step = IntPolynomial((-1, 0, 1))  # y^2 - 1
    power = _ONE
    acc = IntPolynomial.zero()
    for k, c in enumerate(p.coeffs):
        if c:
            acc = acc + (power * c).shift(n - k)
        power = power * step
    return acc


def _sqrt_bounds(v: Fraction, precision: int) -> tuple[Fraction, Fraction]:
    """Outward rational bounds on sqrt(v), exact when v is a square."""
    if v < 0:
        raise InvalidArgumentError("square root of a negative rational")
    scaled = v.numerator * v.denominator * 4**precision
    root = isqrt(scaled)
    denom = v.denominator * 2**precision
    lo = Fraction(root, denom)
    if root * root == scaled:
        return lo, lo
    return lo, Fraction(root + 1, denom)


def _corona_map_bounds(
    x_lo: Fraction, x_hi: Fraction, precision: int
) -> tuple[Fraction, Fraction]:
    """Outward bounds on the increasing map x -> (x + sqrt(x^2+4))/2."""
    s_lo, _ = _sqrt_bounds(x_lo * x_lo + 4, precision)
    _, s_hi = _sqrt_bounds(x_hi * x_hi + 4, precision)
    return (x_lo + s_lo) / 2, (x_hi + s_hi) / 2


def corona_radius(rho_g: RadiusEnclosure) -> RadiusEnclosure:
    """Enclosure of rho(G corona K1) = (rho + sqrt(rho^2+4))/2 from rho(G).

    The output polynomial is corona_poly(source), whose largest real root
    is exactly the corona radius; the interval is the outward-rounded
    image of the input, tightened until the Sturm count certifies a single
    root. Tightening terminates because every other root of the corona
    polynomial maps back strictly below the input interval.
    """
    if rho_g.lo < 0:
        raise InvalidArgumentError("corona_radius needs a nonnegative enclosure")
    q = corona_poly(rho_g.source_poly)
    if rho_g.is_exact:
        r = rho_g.lo
        s_lo, s_hi = _sqrt_bounds(r * r + 4, 8)
        if s_lo == s_hi:
            val = (r + s_lo) / 2
            return RadiusEnclosure(val, val, q, exact_value=frac_str(val))
    precision = 8
    while True:
        lo, hi = _corona_map_bounds(rho_g.lo, rho_g.hi, precision)
        if sturm_count(q, lo, hi) == 1:
            return RadiusEnclosure(lo, hi, q)
        precision *= 2


# =====================================================================
# The caterpillar difference identity
# =====================================================================


def _caterpillar_poly(spine_len: int, i: int, j: int) -> IntPolynomial:
    from .graphs import build_T

    return char_poly_tree(TreeWitness.from_graph(build_T(spine_len, i, j)))


def _claim2_check_params(d: int, i: int, j: int) -> None:
    if not (j >= 1 and j <= i and i <= d and i + j <= d + 1):
        raise InvalidArgumentError(
            f"inadmissible caterpillar-difference parameters d={d}, i={i}, j={j}"
        )


def claim2_difference(d: int, i: int, j: int) -> IntPolynomial:
    """f(T^{d+1}_{i,j},x) - f(T^{d+1}_{i+1,j-1},x), straight from the trees.

    The spine has d+1 vertices. Admissible parameters are those for which
    both caterpillars on each side of the identity exist: 1 <= j <= i,
    i <= d, i + j <= d + 1.
    """
    _claim2_check_params(d, i, j)
    return _caterpillar_poly(d + 1, i, j) - _caterpillar_poly(d + 1, i + 1, j - 1)


def claim2_rhs(d: int, i: int, j: int) -> IntPolynomial:
    """The factored form: [f(T^{d+3-2j}_{i-j+1,1}) - f(T^{d+3-2j}_{i-j+2,0})] x^{2j-2}."""
    _claim2_check_params(d, i, j)
    spine = d + 3 - 2 * j
    diff = _caterpillar_poly(spine, i - j + 1, 1) - _caterpillar_poly(
        spine, i - j + 2, 0
    )
    return diff.shift(2 * j - 2)
