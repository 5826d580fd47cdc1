"""Explicit covers behind the constructive upper bounds, and strip reduction.

Every builder returns a ``ConstructionResult``; none of them trusts its own
arithmetic, so callers (and the test-suite) validate with ``is_cover``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cover import (
    Cover,
    _so_outer_mask,
    is_cover,
    is_trivial,
    runs,
    semi_optimal,
    uncovered_edge,
)
from .errors import CoverDomainError, InvariantViolation, ParameterError
from .graph import PetersenGraph, check_params, rotate

BIPARTITE = "bipartite"
ODD_ODD = "odd-odd"
K1 = "k1"
ALTERNATING_CYCLES = "alternating-cycles"
TILED_EXACT = "tiled-exact"
TILED_PADDED = "tiled-padded"
EVEN_K = "even-k"
FALLBACK = "fallback"


@dataclass(frozen=True)
class ConstructionResult:
    method: str
    cover: Cover
    claimed_bound: int
    detail: str = ""

    @property
    def size(self) -> int:
        return self.cover.size

    def to_certificate(self, **extra) -> dict:
        fields = {"method": self.method, "claimed_bound": self.claimed_bound}
        if self.detail:
            fields["detail"] = self.detail
        fields.update(extra)
        return self.cover.to_certificate(**fields)


@dataclass(frozen=True)
class TilingParams:
    m: int
    r: int
    r_prime: int

    @classmethod
    def for_graph(cls, n: int, k: int, m: int) -> "TilingParams":
        if not 1 <= m < k:
            raise ParameterError(f"tiling needs m < k, got m={m}, k={k}")
        r = k % m
        if not m > 2 * r > 0:
            raise ParameterError(f"tiling needs m > 2r > 0, got m={m}, r={r}")
        return cls(m, r, n % m)


def tiling_sizes(k: int):
    """Sector sizes m admissible for tiling P(n, k)."""
    return [m for m in range(1, k) if m > 2 * (k % m) > 0]


def bipartite_cover(g: PetersenGraph) -> ConstructionResult:
    """The side ``{u_i, v_{i+1} : i odd}`` of the bipartition; size n."""
    n, k = g.n, g.k
    if not (n % 2 == 0 and k % 2 == 1):
        raise ParameterError(f"bipartite cover needs n even and k odd, got P({n},{k})")
    odd = range(1, n + 1, 2)
    c = Cover.from_indices(n, k, odd, [i % n + 1 for i in odd])
    return ConstructionResult(BIPARTITE, c, n)


def odd_odd_cover(g: PetersenGraph) -> ConstructionResult:
    n, k = g.n, g.k
    if not (n % 2 == 1 and k % 2 == 1):
        raise ParameterError(f"odd-odd cover needs n and k odd, got P({n},{k})")
    sel_u = list(range(1, n + 1, 2))
    sel_v = list(range(2, n + 1, 2))
    # the (k+1)/2 V-edges v_{n-i} v_{n-i+k}, i = 0, 2, .., k-1, join two odd
    # subscripts; take the endpoint v_{n-i+k} = v_{k-i}
    sel_v += [g.norm(n - i + k) for i in range(0, k, 2)]
    c = Cover.from_indices(n, k, sel_u, sel_v)
    return ConstructionResult(ODD_ODD, c, n + (k + 1) // 2)


def k1_cover(g: PetersenGraph) -> ConstructionResult:
    n, k = g.n, g.k
    if not (k == 1 and n % 2 == 1):
        raise ParameterError(f"k=1 cover needs k = 1 and n odd, got P({n},{k})")
    c = Cover.from_indices(n, k, range(1, n + 1, 2), [1] + list(range(2, n + 1, 2)))
    return ConstructionResult(K1, c, n + 1)


def alternating_cycles_bound(n: int, k: int) -> int:
    check_params(n, k)
    g = PetersenGraph(n, k).g
    if (n // g) % 2:
        return n + (n + g) // 4
    return n + n // 4


def alternating_cycles_cover(g: PetersenGraph) -> ConstructionResult:
    """All of U plus every other vertex around each inner cycle, made semi-optimal."""
    v = 0
    for cyc in g.inner_cycles():
        for pos in range(0, len(cyc), 2):
            v |= 1 << (cyc[pos].index - 1)
    c = Cover(g.n, g.k, (1 << g.n) - 1, v)
    return ConstructionResult(
        ALTERNATING_CYCLES, semi_optimal(g, c), alternating_cycles_bound(g.n, g.k)
    )


def tiled_cover(g: PetersenGraph, tiling: TilingParams | int, base: Cover) -> ConstructionResult:
    """Repeat the pattern of a cover of P(m, r) over consecutive m-sectors.

    When m does not divide n the leftover r'-sector is patched with
    ``u_{n-r'+1..n}`` and ``v_{n-k+1..n+k-r'}``.
    """
    n, k = g.n, g.k
    if isinstance(tiling, int):
        tiling = TilingParams.for_graph(n, k, tiling)
    m, r, r_prime = tiling.m, tiling.r, tiling.r_prime
    if tiling != TilingParams.for_graph(n, k, m):
        raise ParameterError(f"inconsistent tiling parameters {tiling} for P({n},{k})")
    if (base.n, base.k) != (m, r):
        raise ParameterError(f"base must be a cover of P({m},{r}), got P({base.n},{base.k})")
    if not is_cover(PetersenGraph(m, r), base):
        raise CoverDomainError("tiling base is not a cover")
    sectors = n // m
    u = v = 0
    for s in range(sectors):
        u |= base.u << (s * m)
        v |= base.v << (s * m)
    if r_prime == 0:
        c = Cover(n, k, u, v)
        return ConstructionResult(TILED_EXACT, c, sectors * base.size, f"m={m}")
    for i in range(n - r_prime + 1, n + 1):
        u |= 1 << (i - 1)
    for i in range(n - k + 1, n + k - r_prime + 1):
        v |= 1 << (g.norm(i) - 1)
    c = Cover(n, k, u, v)
    return ConstructionResult(TILED_PADDED, c, sectors * base.size + 2 * k, f"m={m}")


def even_k_bound(n: int, k: int) -> int:
    m = k - 1
    if n % m == 0:
        return n + n // m
    return n + n // m + 2 * k


def even_k_cover(g: PetersenGraph) -> ConstructionResult:
    """Tiling with m = k - 1 over the (minimum) k=1 cover of P(k-1, 1)."""
    n, k = g.n, g.k
    if not (k % 2 == 0 and k >= 4):
        raise ParameterError(f"even-k cover needs even k >= 4, got k={k}")
    base = k1_cover(PetersenGraph(k - 1, 1)).cover
    res = tiled_cover(g, k - 1, base)
    return ConstructionResult(EVEN_K, res.cover, even_k_bound(n, k), res.detail)


def fallback_cover(g: PetersenGraph) -> ConstructionResult:
    """All of V plus ``u_1, u_3, ...``; a trivial cover of size n + ceil(n/2)."""
    n = g.n
    c = Cover.from_indices(n, g.k, range(1, n + 1, 2), range(1, n + 1))
    return ConstructionResult(FALLBACK, c, n + (n + 1) // 2)


def applicable_constructions(g: PetersenGraph):
    """Every construction whose preconditions hold for ``g``."""
    n, k = g.n, g.k
    out = []
    if n % 2 == 0 and k % 2 == 1:
        out.append(bipartite_cover(g))
    if n % 2 == 1 and k % 2 == 1:
        out.append(odd_odd_cover(g))
    if k == 1 and n % 2 == 1:
        out.append(k1_cover(g))
    out.append(alternating_cycles_cover(g))
    if k % 2 == 0 and k >= 4:
        out.append(even_k_cover(g))
    for m in tiling_sizes(k):
        base = best_construction(PetersenGraph(m, k % m)).cover
        out.append(tiled_cover(g, m, base))
    out.append(fallback_cover(g))
    return out


def best_construction(g: PetersenGraph) -> ConstructionResult:
    return _best_construction(g.n, g.k)


@lru_cache(maxsize=None)
def _best_construction(n: int, k: int) -> ConstructionResult:
    g = PetersenGraph(n, k)
    best = None
    for res in applicable_constructions(g):
        if not is_cover(g, res.cover):
            raise InvariantViolation(
                f"{res.method} {res.detail} on P({n},{k}) misses {uncovered_edge(g, res.cover)}"
            )
        if best is None or res.size < best.size:
            best = res
    return best


# strip reduction


def strip_target(k: int) -> int:
    """Largest strip guaranteed attainable in some minimum cover."""
    return k + 1 if k % 2 else k + 2


def _cost(v: int, n: int) -> int:
    return sum(m // 2 for _, m in runs(v, n))


def _measure(v: int, n: int):
    sizes = [m for _, m in runs(v, n)]
    top = max(sizes, default=0)
    return top, sizes.count(top)


def _covers_inner(v: int, n: int, k: int) -> bool:
    nv = ~v & ((1 << n) - 1)
    return not nv & rotate(nv, k, n)


def _drop_redundant(v: int, n: int, k: int) -> int:
    """Deselect inner vertices whose two V-neighbours are both selected."""
    changed = True
    while changed:
        changed = False
        for i in range(n):
            if v >> i & 1 and v >> ((i + k) % n) & 1 and v >> ((i - k) % n) & 1:
                v &= ~(1 << i)
                changed = True
    return v


@dataclass(frozen=True)
class ReductionResult:
    cover: Cover
    iterations: int
    exchanges: int
    max_strip: int


def reduce_strips(g: PetersenGraph, c: Cover, max_iterations: int | None = None) -> ReductionResult:
    """Turn a minimum cover into one of equal size whose strips are all short.

    Alternates two moves on the inner selection, completing U semi-optimally
    at the end: drop inner vertices whose both V-neighbours are selected, and
    for a longest strip ``v_i..v_{i+m-1}`` above target move a selected
    ``v_p`` with ``p - k`` inside the strip to ``v_{p+k}`` (or the mirror
    image from the strip's right end).  A move is kept only if it stays a
    cover, does not change the size, and lowers (longest strip, how many
    strips have that length) lexicographically.
    """
    n, k = g.n, g.k
    if not is_cover(g, c):
        raise CoverDomainError(f"not a cover: {uncovered_edge(g, c)} is uncovered")
    if is_trivial(c):
        raise CoverDomainError("trivial covers are never minimum")
    cap = n * n if max_iterations is None else max_iterations
    target = strip_target(k)
    v = c.v
    if n + _cost(v, n) > c.size:
        raise InvariantViolation("semi-optimal completion larger than the cover")
    iterations = exchanges = 0
    while True:
        v = _drop_redundant(v, n, k)
        cost = _cost(v, n)
        top, _ = _measure(v, n)
        if top <= target:
            break
        iterations += 1
        if iterations > cap:
            raise InvariantViolation(
                f"reduce_strips hit its iteration cap {cap} on P({n},{k}); longest strip {top}"
            )
        v = _exchange(v, n, k, cost)
        exchanges += 1
    out = Cover(n, k, _so_outer_mask(v, n), v)
    if not is_cover(g, out):
        raise InvariantViolation(f"reduce_strips produced a non-cover on P({n},{k})")
    return ReductionResult(out, iterations, exchanges, _measure(v, n)[0])


def _exchange(v: int, n: int, k: int, cost: int) -> int:
    before = _measure(v, n)
    strips_ = [(s, m) for s, m in runs(v, n) if m == before[0]]
    for start, m in strips_:
        first = start - 1
        for t in range(m - k):
            # left-anchored: v_{first+t} stays, v_p = v_{first+t+k} moves to p + k
            for p, q in (
                ((first + k + t) % n, (first + 2 * k + t) % n),
                ((first + m - 1 - k - t) % n, (first + m - 1 - 2 * k - t) % n),
            ):
                if not v >> p & 1 or v >> q & 1:
                    continue
                w = (v & ~(1 << p)) | (1 << q)
                if w == (1 << n) - 1 or not _covers_inner(w, n, k):
                    continue
                if _cost(w, n) != cost:
                    continue
                if _measure(w, n) < before:
                    return w
    raise InvariantViolation(
        f"no size-preserving exchange shortens the longest strip ({before[0]}) on P({n},{k})"
    )
