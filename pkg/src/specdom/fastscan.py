"""Brute-force scan of labeled connected graphs with extremal domination.

Supports the minimizer-is-a-tree cross-check at n <= 8, where the labeled
universe reaches 2^28 edge subsets. The scan keeps every connected graph
that has no dominating set of size < s; since gamma <= floor(n/2) for all
connected graphs (no isolated vertices), running with s = floor(n/2)
captures exactly the gamma = floor(n/2) class.

Class members are then thinned by an integer Rayleigh certificate: for a
positive integer vector v, (v.Av)/(v.v) is a lower bound on the largest
adjacency eigenvalue, so

    (v.Av) * bar_den > bar_num * (v.v)    ==>    rho > bar

certifies that the graph cannot tie or beat a minimizer whose enclosure
upper bound is <= bar. The vector comes from a few shifted power
iterations (A+I keeps bipartite iterates from oscillating) with periodic
right-shift renormalization; everything stays within int64 (entries are
renormalized below 2^18, so the quadratic forms stay below 2^48 and the
cross-multiplied test below 2^63 for bar denominators up to 2^13).

Exclusion is conservative and one-sided: survivors still need exact
confirmation, but nothing with rho <= bar is ever dropped.

A numba kernel handles n = 7, 8; a pure-Python twin with identical
semantics covers small n and serves as its oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import InvalidArgumentError, ResourceLimitError
from .graphs import Graph

BAR_DEN_BITS = 13
_RAYLEIGH_ITERS = 30
_RENORM_BITS = 18
_SURVIVOR_CAPACITY = 1 << 18

MAX_SCAN_N = 8


@dataclass(frozen=True)
class ClassScanResult:
    """Outcome of one labeled scan."""

    n: int
    min_set_size: int  # s: no dominating set of size < s exists
    class_count: int
    survivor_masks: tuple[int, ...]
    bar: Fraction | None  # effective Rayleigh exclusion bound, if any


def edge_pairs(n: int) -> list[tuple[int, int]]:
    """Fixed edge ordering shared by mask encodings."""
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def mask_to_graph(n: int, mask: int) -> Graph:
    pairs = edge_pairs(n)
    return Graph(n, (pairs[k] for k in range(len(pairs)) if mask >> k & 1))


def _bar_to_ints(bar: Fraction) -> tuple[int, int]:
    """Round the bound up onto a 2^13 denominator (safe: only weakens it)."""
    den = 1 << BAR_DEN_BITS
    num = -((-bar.numerator * den) // bar.denominator)
    if num >= 1 << 15:
        raise InvalidArgumentError(f"Rayleigh bound {bar} too large for int64 budget")
    return num, den


def _small_subsets(n: int, max_size: int) -> list[int]:
    """Vertex-subset masks of size 1..max_size, small sizes first."""
    out = []
    for size in range(1, max_size + 1):
        for combo in combinations(range(n), size):
            m = 0
            for v in combo:
                m |= 1 << v
            out.append(m)
    return out


# =====================================================================
# Pure-Python scan (oracle twin of the numba kernel)
# =====================================================================


def _scan_pure(
    n: int, s: int, bar_num: int, bar_den: int
) -> tuple[int, list[int]]:
    pairs = edge_pairs(n)
    m = len(pairs)
    full = (1 << n) - 1
    subsets = _small_subsets(n, s - 1)
    class_count = 0
    survivors: list[int] = []
    for mask in range(1 << m):
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
        reach = 1 | nbr[0]
        prev = 1
        while reach != prev:
            prev = reach
            for v in range(n):
                if reach >> v & 1:
                    reach |= nbr[v]
        if reach != full:
            continue
        dominated = False
        for sub in subsets:
            cover = 0
            rest = sub
            while rest:
                v = (rest & -rest).bit_length() - 1
                cover |= nbr[v] | (1 << v)
                rest &= rest - 1
            if cover == full:
                dominated = True
                break
        if dominated:
            continue
        class_count += 1
        if bar_num < 0 or not _rayleigh_exceeds_pure(n, nbr, bar_num, bar_den):
            survivors.append(mask)
    return class_count, survivors


def _rayleigh_exceeds_pure(
    n: int, nbr: list[int], bar_num: int, bar_den: int
) -> bool:
    vec = [1] * n
    for _ in range(_RAYLEIGH_ITERS):
        nxt = [0] * n
        for v in range(n):
            acc = vec[v]
            rest = nbr[v]
            while rest:
                u = (rest & -rest).bit_length() - 1
                acc += vec[u]
                rest &= rest - 1
            nxt[v] = acc
        top = max(nxt)
        shift = max(0, top.bit_length() - _RENORM_BITS)
        vec = [x >> shift for x in nxt]
    num = 0
    den = 0
    for v in range(n):
        row = 0
        rest = nbr[v]
        while rest:
            u = (rest & -rest).bit_length() - 1
            row += vec[u]
            rest &= rest - 1
        num += vec[v] * row
        den += vec[v] * vec[v]
    return num * bar_den > bar_num * den


# =====================================================================
# numba kernel
# =====================================================================

_NUMBA_KERNEL = None


def _build_numba_kernel():
    global _NUMBA_KERNEL
    if _NUMBA_KERNEL is not None:
        return _NUMBA_KERNEL
    import numba
    import numpy as np

    @numba.njit(cache=True)
    def kernel(
        n, pairs_u, pairs_v, subsets, bar_num, bar_den, out
    ):  # pragma: no cover - exercised via the dispatcher
        m = len(pairs_u)
        full = (1 << n) - 1
        count = 0
        found = 0
        nbr = np.zeros(n, dtype=np.int64)
        vec = np.zeros(n, dtype=np.int64)
        nxt = np.zeros(n, dtype=np.int64)
        for mask in range(1 << m):
            for v in range(n):
                nbr[v] = 0
            for k in range(m):
                if mask >> k & 1:
                    nbr[pairs_u[k]] |= 1 << pairs_v[k]
                    nbr[pairs_v[k]] |= 1 << pairs_u[k]
            reach = 1 | nbr[0]
            prev = 1
            while reach != prev:
                prev = reach
                for v in range(n):
                    if reach >> v & 1:
                        reach |= nbr[v]
            if reach != full:
                continue
            dominated = False
            for si in range(len(subsets)):
                sub = subsets[si]
                cover = 0
                rest = sub
                while rest:
                    v = 0
                    low = rest & -rest
                    while low > 1:
                        low >>= 1
                        v += 1
                    cover |= nbr[v] | (1 << v)
                    rest &= rest - 1
                if cover == full:
                    dominated = True
                    break
            if dominated:
                continue
            count += 1
            if bar_num >= 0:
                for v in range(n):
                    vec[v] = 1
                for _ in range(_RAYLEIGH_ITERS):
                    top = 0
                    for v in range(n):
                        acc = vec[v]
                        rest = nbr[v]
                        while rest:
                            u = 0
                            low = rest & -rest
                            while low > 1:
                                low >>= 1
                                u += 1
                            acc += vec[u]
                            rest &= rest - 1
                        nxt[v] = acc
                        if acc > top:
                            top = acc
                    shift = 0
                    while (top >> shift) >= (1 << _RENORM_BITS):
                        shift += 1
                    for v in range(n):
                        vec[v] = nxt[v] >> shift
                num = 0
                den = 0
                for v in range(n):
                    row = 0
                    rest = nbr[v]
                    while rest:
                        u = 0
                        low = rest & -rest
                        while low > 1:
                            low >>= 1
                            u += 1
                        row += vec[u]
                        rest &= rest - 1
                    num += vec[v] * row
                    den += vec[v] * vec[v]
                if num * bar_den > bar_num * den:
                    continue
            if found < len(out):
                out[found] = mask
            found += 1
        return count, found

    _NUMBA_KERNEL = kernel
    return kernel


def _scan_numba(
    n: int, s: int, bar_num: int, bar_den: int
) -> tuple[int, list[int]]:
    import numpy as np

    kernel = _build_numba_kernel()
    pairs = edge_pairs(n)
    pairs_u = np.array([p[0] for p in pairs], dtype=np.int64)
    pairs_v = np.array([p[1] for p in pairs], dtype=np.int64)
    subsets = np.array(_small_subsets(n, s - 1), dtype=np.int64)
    out = np.zeros(_SURVIVOR_CAPACITY, dtype=np.int64)
    count, found = kernel(n, pairs_u, pairs_v, subsets, bar_num, bar_den, out)
    if found > len(out):
        raise ResourceLimitError(
            f"survivor buffer overflow: {found} > {len(out)}"
        )
    return int(count), [int(x) for x in out[:found]]


def labeled_class_survivors(
    n: int,
    s: int,
    bar: Fraction | None,
    *,
    engine: str = "auto",
) -> ClassScanResult:
    """Scan labeled connected graphs with no dominating set of size < s.

    With s = floor(n/2) the scanned set is exactly the gamma = floor(n/2)
    class (Ore's bound supplies the other inequality). bar=None keeps every
    class member; otherwise members with a Rayleigh certificate rho > bar
    are dropped.
    """
    if not 1 <= n <= MAX_SCAN_N:
        raise ResourceLimitError(f"labeled scan limited to n <= {MAX_SCAN_N}, got {n}")
    if not 1 <= s <= n:
        raise InvalidArgumentError(f"need 1 <= s <= n, got s={s}")
    if engine not in ("auto", "numba", "pure"):
        raise InvalidArgumentError(f"unknown engine {engine!r}")
    if bar is None:
        bar_num, bar_den = -1, 1
        effective = None
    else:
        bar_num, bar_den = _bar_to_ints(bar)
        effective = Fraction(bar_num, bar_den)
    use_numba = engine == "numba" or (engine == "auto" and n >= 7)
    if use_numba:
        count, survivors = _scan_numba(n, s, bar_num, bar_den)
    else:
        count, survivors = _scan_pure(n, s, bar_num, bar_den)
    return ClassScanResult(
        n=n,
        min_set_size=s,
        class_count=count,
        survivor_masks=tuple(survivors),
        bar=effective,
    )
