"""Exact integer polynomials and Sturm-sequence root counting.

Everything here is exact: coefficients are Python ints, evaluation points are
Fractions, and sign computations scale through denominators instead of
dividing. The Sturm machinery counts *distinct* real roots in half-open
intervals (lo, hi]:

    With S0 the (primitive, positive-leading) squarefree part of p,
    S1 = S0', and S_{k+1} = -(S_{k-1} mod S_k) up to positive factors,
    the zero-skipping sign-variation count V(x) is right-continuous and
    drops by one exactly when x crosses a root, so
    V(lo) - V(hi) = #distinct roots in (lo, hi].

Right-continuity is what buys the half-open convention without endpoint
special-casing: a root at hi is counted, a root at lo is not.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable

from .errors import InvalidArgumentError

Rational = int | Fraction


class IntPolynomial:
    """Immutable integer polynomial; coeffs ascending, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise InvalidArgumentError(
                    f"integer coefficients required, got {type(c).__name__}"
                )
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *args) -> None:
        raise AttributeError("IntPolynomial is immutable")

    # ---- constructors ----

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @classmethod
    def monomial(cls, c: int, k: int) -> "IntPolynomial":
        return cls((0,) * k + (c,))

    # ---- basic queries ----

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise InvalidArgumentError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    # ---- arithmetic ----

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return IntPolynomial(out)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for k, c in enumerate(other.coeffs):
            out[k] -= c
        return IntPolynomial(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial.zero()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPolynomial(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by x^k."""
        if k < 0:
            raise InvalidArgumentError("shift exponent must be nonnegative")
        if self.is_zero():
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(tuple(k * c for k, c in enumerate(self.coeffs) if k))

    # ---- evaluation ----

    def __call__(self, x: Rational) -> Rational:
        acc: Rational = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x: Rational) -> int:
        """Sign of p(x) computed entirely in integers."""
        if isinstance(x, int):
            v = self(x)
            return (v > 0) - (v < 0)
        a, b = x.numerator, x.denominator  # b > 0 by Fraction normalization
        if not self.coeffs:
            return 0
        v = self.coeffs[-1]
        bp = 1
        for c in reversed(self.coeffs[:-1]):
            bp *= b
            v = v * a + c * bp
        return (v > 0) - (v < 0)

    # ---- content / primitive ----

    def content(self) -> int:
        """gcd of coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.coeffs:
            g = gcd(g, abs(c))
            if g == 1:
                break
        return g

    def primitive_part(self) -> "IntPolynomial":
        """Divide out the content; sign of coefficients is preserved."""
        g = self.content()
        if g <= 1:
            return self
        return IntPolynomial(tuple(c // g for c in self.coeffs))

    # ---- plumbing ----

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def to_json(self) -> list[str]:
        """Ascending coefficients as decimal strings."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Iterable[str]) -> "IntPolynomial":
        try:
            return cls(tuple(int(s) for s in data))
        except ValueError:
            raise InvalidArgumentError("polynomial JSON must hold integer strings")


# =====================================================================
# Division, gcd, squarefree part
# =====================================================================


def _divmod_fraction(
    p: IntPolynomial, q: IntPolynomial
) -> tuple[list[Fraction], list[Fraction]]:
    """Quotient and remainder of p/q over the rationals (coeff lists)."""
    if q.is_zero():
        raise InvalidArgumentError("division by the zero polynomial")
    rem = [Fraction(c) for c in p.coeffs]
    qd = q.degree
    qlead = Fraction(q.leading)
    quot = [Fraction(0)] * max(0, len(rem) - qd)
    while len(rem) - 1 >= qd and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < qd:
            break
        k = len(rem) - 1 - qd
        factor = rem[-1] / qlead
        quot[k] = factor
        for j, c in enumerate(q.coeffs):
            rem[k + j] -= factor * c
        rem.pop()
    while rem and rem[-1] == 0:
        rem.pop()
    return quot, rem


def _primitive_from_fractions(coeffs: list[Fraction]) -> IntPolynomial:
    """Scale a rational coefficient list to a primitive integer polynomial.

    Scaling factor is positive, so signs (and hence Sturm variations) are
    preserved.
    """
    if not any(coeffs):
        return IntPolynomial.zero()
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    return IntPolynomial(ints).primitive_part()


def poly_div_exact(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Exact division p/q in Q[x]; raises if the remainder is nonzero."""
    quot, rem = _divmod_fraction(p, q)
    if rem:
        raise InvalidArgumentError("polynomials do not divide exactly")
    if any(c.denominator != 1 for c in quot):
        # Can only happen when contents interfere; normalize via primitive part.
        return _primitive_from_fractions(quot)
    return IntPolynomial(tuple(int(c) for c in quot))


def poly_gcd(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Primitive gcd with positive leading coefficient (Euclid + primitivize)."""
    a, b = p.primitive_part(), q.primitive_part()
    while not b.is_zero():
        _, rem = _divmod_fraction(a, b)
        a, b = b, _primitive_from_fractions(rem)
    if a.is_zero():
        return a
    if a.leading < 0:
        a = -a
    return a


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    """p / gcd(p, p'), primitive, positive leading coefficient."""
    if p.is_zero():
        raise InvalidArgumentError("squarefree part of the zero polynomial")
    g = poly_gcd(p, p.derivative())
    if g.degree <= 0:
        out = p.primitive_part()
    else:
        out = poly_div_exact(p, g).primitive_part()
    return -out if out.leading < 0 else out


# =====================================================================
# Sturm sequences
# =====================================================================


@lru_cache(maxsize=8192)
def sturm_chain(p: IntPolynomial) -> tuple[IntPolynomial, ...]:
    """Sturm chain of the squarefree part of p (primitive at every step)."""
    s0 = squarefree_part(p)
    if s0.degree <= 0:
        return (s0,)
    chain = [s0, s0.derivative().primitive_part()]
    while True:
        _, rem = _divmod_fraction(chain[-2], chain[-1])
        nxt = _primitive_from_fractions([-c for c in rem])
        if nxt.is_zero():
            break
        chain.append(nxt)
    return tuple(chain)


def sign_variations(chain: tuple[IntPolynomial, ...], x: Rational) -> int:
    """Sign changes along the chain at x, skipping zeros."""
    prev = 0
    count = 0
    for s in chain:
        sg = s.sign_at(x)
        if sg == 0:
            continue
        if prev and sg != prev:
            count += 1
        prev = sg
    return count


def sturm_count(p: IntPolynomial, lo: Rational, hi: Rational) -> int:
    """Number of distinct real roots of p in the half-open interval (lo, hi]."""
    if p.is_zero():
        raise InvalidArgumentError("root counting needs a nonzero polynomial")
    if not lo < hi:
        raise InvalidArgumentError(f"need lo < hi, got lo={lo}, hi={hi}")
    chain = sturm_chain(p)
    return sign_variations(chain, lo) - sign_variations(chain, hi)


def count_roots_above(p: IntPolynomial, bound: Rational) -> int:
    """Number of distinct real roots strictly greater than `bound`."""
    if p.is_zero():
        raise InvalidArgumentError("root counting needs a nonzero polynomial")
    hi = cauchy_root_bound(p)
    if bound >= hi:
        return 0
    return sturm_count(p, bound, hi)


def cauchy_root_bound(p: IntPolynomial) -> Fraction:
    """A rational B with all real roots of p in [-B, B] (Cauchy bound)."""
    if p.is_zero() or p.degree < 1:
        raise InvalidArgumentError("root bound needs degree >= 1")
    lead = abs(p.leading)
    biggest = max(abs(c) for c in p.coeffs[:-1])
    return 1 + Fraction(biggest, lead)


def frac_str(x: Fraction) -> str:
    """Exact "p/q" rendering used in JSON reports."""
    return f"{x.numerator}/{x.denominator}"


def parse_frac(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InvalidArgumentError(f"not a rational: {text!r}")
