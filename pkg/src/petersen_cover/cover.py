"""Vertex covers of P(n, k) and the strip calculus built on them.

A ``Cover`` stores two n-bit masks: bit ``i - 1`` of ``u`` selects ``u_i`` and
bit ``i - 1`` of ``v`` selects ``v_i``.  A *strip* is a maximal circular run
of selected inner vertices.  For a non-trivial cover ``c`` let ``a(c)`` be the
number of selected inner vertices and ``b(c)`` the number of odd strips; the
semi-optimal cover ``so(c)`` keeps the inner selection, selects the twin of
every unselected inner vertex, and selects every second twin inside each
strip.  Its size is ``n + (a - b) / 2``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import NamedTuple

from .errors import CoverDomainError, ResourceLimitError
from .graph import INNER, OUTER, Edge, PetersenGraph, Vertex, rotate

D_ENUM_LIMIT = 24  # max 2n for d_value_bruteforce
COVER_ENUM_LIMIT = 24  # max 2n for iter_covers


@dataclass(frozen=True)
class Cover:
    n: int
    k: int
    u: int  # n-bit mask over u_1..u_n
    v: int  # n-bit mask over v_1..v_n

    def __post_init__(self):
        full = (1 << self.n) - 1
        if self.u & ~full or self.v & ~full or self.u < 0 or self.v < 0:
            raise CoverDomainError(f"selection out of range for P({self.n},{self.k})")

    @classmethod
    def from_indices(cls, n, k, selected_u=(), selected_v=()):
        u = v = 0
        for i in selected_u:
            if not 1 <= i <= n:
                raise CoverDomainError(f"u index {i} outside 1..{n}")
            u |= 1 << (i - 1)
        for i in selected_v:
            if not 1 <= i <= n:
                raise CoverDomainError(f"v index {i} outside 1..{n}")
            v |= 1 << (i - 1)
        return cls(n, k, u, v)

    @classmethod
    def from_vertices(cls, g: PetersenGraph, vertices):
        return cls.from_mask(g, g.mask_of(vertices))

    @classmethod
    def from_mask(cls, g: PetersenGraph, mask: int):
        """Build from a bitset over graph vertex ids (``u`` ids low, ``v`` ids high)."""
        full = (1 << g.n) - 1
        return cls(g.n, g.k, mask & full, (mask >> g.n) & full)

    @classmethod
    def full(cls, n, k):
        full = (1 << n) - 1
        return cls(n, k, full, full)

    @property
    def mask(self) -> int:
        return self.u | (self.v << self.n)

    @property
    def size(self) -> int:
        return self.u.bit_count() + self.v.bit_count()

    def __len__(self):
        return self.size

    @property
    def selected_u(self):
        return [i + 1 for i in range(self.n) if self.u >> i & 1]

    @property
    def selected_v(self):
        return [i + 1 for i in range(self.n) if self.v >> i & 1]

    def vertices(self):
        return [Vertex(OUTER, i) for i in self.selected_u] + [
            Vertex(INNER, i) for i in self.selected_v
        ]

    def __contains__(self, vertex: Vertex):
        i = (vertex.index - 1) % self.n
        bits = self.u if vertex.side == OUTER else self.v
        return bool(bits >> i & 1)

    def sort_key(self):
        """Lexicographic key over the sorted list of selected vertex ids."""
        mask = self.mask
        return tuple(i for i in range(2 * self.n) if mask >> i & 1)

    def to_certificate(self, **extra) -> dict:
        cert = {
            "n": self.n,
            "k": self.k,
            "selected_u": self.selected_u,
            "selected_v": self.selected_v,
            "size": self.size,
        }
        cert.update(extra)
        return cert

    def to_json(self, **extra) -> str:
        return json.dumps(self.to_certificate(**extra))

    @classmethod
    def from_certificate(cls, cert: dict) -> "Cover":
        c = cls.from_indices(cert["n"], cert["k"], cert["selected_u"], cert["selected_v"])
        if "size" in cert and cert["size"] != c.size:
            raise CoverDomainError(
                f"certificate says size {cert['size']} but lists {c.size} vertices"
            )
        return c

    @classmethod
    def from_json(cls, text: str) -> "Cover":
        return cls.from_certificate(json.loads(text))


class Strip(NamedTuple):
    start: int  # 1..n
    size: int
    n: int

    @property
    def indices(self):
        return [(self.start - 1 + j) % self.n + 1 for j in range(self.size)]

    @property
    def vertices(self):
        return [Vertex(INNER, i) for i in self.indices]

    @property
    def odd(self) -> bool:
        return self.size % 2 == 1


@dataclass(frozen=True)
class CoverStats:
    a: int
    b: int
    size: int
    strip_sizes: tuple

    @property
    def a_minus_b(self) -> int:
        return self.a - self.b


@dataclass(frozen=True)
class DValue:
    d: int
    witness: Cover  # a cover attaining the minimum
    patterns: int  # inner patterns examined


def _check_same_graph(g: PetersenGraph, c: Cover):
    if (g.n, g.k) != (c.n, c.k):
        raise CoverDomainError(f"cover of P({c.n},{c.k}) used with P({g.n},{g.k})")


def uncovered_edge(g: PetersenGraph, c: Cover) -> Edge | None:
    """First edge in canonical order with no selected endpoint, if any."""
    _check_same_graph(g, c)
    mask = c.mask
    for a, b, kind in g.edges:
        if not (mask >> a & 1 or mask >> b & 1):
            return Edge(g.vertex(a), g.vertex(b), kind)
    return None


def is_cover(g: PetersenGraph, c: Cover) -> bool:
    _check_same_graph(g, c)
    return masks_cover(c.n, c.k, c.u, c.v)


def masks_cover(n: int, k: int, u: int, v: int) -> bool:
    full = (1 << n) - 1
    nu = ~u & full
    nv = ~v & full
    if nu & rotate(nu, 1, n):
        return False
    if nu & nv:
        return False
    return not (nv & rotate(nv, k, n))


def is_trivial(c: Cover) -> bool:
    return c.v == (1 << c.n) - 1


def runs(mask: int, n: int):
    """Maximal circular runs of set bits as ``(start, size)`` pairs, 1-based.

    A run through positions n and 1 is reported once, starting at its first
    position in circular order. The all-ones mask has no runs in this sense
    and is rejected.
    """
    full = (1 << n) - 1
    if mask == full:
        raise CoverDomainError("all inner vertices selected: no strips")
    out = []
    # begin scanning just after an unselected position so no run is split
    z = ((~mask & full) & -(~mask & full)).bit_length() - 1
    run_start = None
    run_len = 0
    for step in range(1, n + 1):
        i = (z + step) % n
        if mask >> i & 1:
            if run_len == 0:
                run_start = i
            run_len += 1
        elif run_len:
            out.append((run_start + 1, run_len))
            run_len = 0
    out.sort()
    return out


def strips(c: Cover):
    if is_trivial(c):
        raise CoverDomainError("strips are undefined for a trivial cover")
    return [Strip(s, m, c.n) for s, m in runs(c.v, c.n)]


def stats(c: Cover) -> CoverStats:
    sizes = tuple(s.size for s in strips(c))
    return CoverStats(
        a=c.v.bit_count(),
        b=sum(1 for m in sizes if m % 2),
        size=c.size,
        strip_sizes=sizes,
    )


def optimal_twin_selection(strip: Strip) -> frozenset:
    """Twins at offsets 1, 3, 5, ... inside the strip: ``floor(size / 2)`` vertices."""
    return frozenset(
        Vertex(OUTER, (strip.start - 1 + j) % strip.n + 1) for j in range(1, strip.size, 2)
    )


def _so_outer_mask(v: int, n: int) -> int:
    full = (1 << n) - 1
    u = ~v & full
    for start, size in runs(v, n):
        for j in range(1, size, 2):
            u |= 1 << ((start - 1 + j) % n)
    return u


def semi_optimal(g: PetersenGraph, c: Cover) -> Cover:
    _check_same_graph(g, c)
    if is_trivial(c):
        raise CoverDomainError("semi-optimal transform needs a non-trivial cover")
    if not is_cover(g, c):
        raise CoverDomainError(f"not a cover: {uncovered_edge(g, c)} is uncovered")
    return Cover(c.n, c.k, _so_outer_mask(c.v, c.n), c.v)


def so_size(n: int, a: int, b: int) -> int:
    """Size of a semi-optimal cover with the given a(c) and b(c)."""
    if (a - b) % 2:
        raise ValueError(f"a - b must be even, got a={a}, b={b}")
    return n + (a - b) // 2


def inner_patterns(n: int, k: int):
    """All inner masks that cover every V-edge, excluding the full mask."""
    full = (1 << n) - 1
    for v in range(full):
        nv = ~v & full
        if not nv & rotate(nv, k, n):
            yield v


def outer_patterns(n: int):
    """All outer masks covering the outer cycle."""
    full = (1 << n) - 1
    for u in range(full + 1):
        nu = ~u & full
        if not nu & rotate(nu, 1, n):
            yield u


def d_value_bruteforce(g: PetersenGraph) -> DValue:
    """Exact ``min(a(c) - b(c))`` over all non-trivial covers by enumeration.

    ``a`` and ``b`` depend only on the inner selection, and an inner selection
    belongs to some cover exactly when it covers every V-edge (complete it with
    all of U), so enumerating those inner patterns enumerates every attainable
    ``(a, b)``.
    """
    if 2 * g.n > D_ENUM_LIMIT:
        raise ResourceLimitError(f"d enumeration limited to 2n <= {D_ENUM_LIMIT}, got 2n={2 * g.n}")
    full = (1 << g.n) - 1
    best = None
    best_v = None
    count = 0
    for v in inner_patterns(g.n, g.k):
        count += 1
        sizes = [m for _, m in runs(v, g.n)]
        val = v.bit_count() - sum(m % 2 for m in sizes)
        if best is None or val < best:
            best, best_v = val, v
    witness = Cover(g.n, g.k, full, best_v)
    return DValue(best, witness, count)


def iter_covers(g: PetersenGraph, include_trivial: bool = False):
    """Every vertex cover of ``g``.

    Each cover restricts to a cover of the outer cycle and to a cover of the
    inner cycles, so pairing those two families and keeping the pairs that
    also cover every spoke visits each cover exactly once.
    """
    if 2 * g.n > COVER_ENUM_LIMIT:
        raise ResourceLimitError(f"cover enumeration limited to 2n <= {COVER_ENUM_LIMIT}")
    n, k = g.n, g.k
    full = (1 << n) - 1
    outers = list(outer_patterns(n))
    inners = list(inner_patterns(n, k))
    if include_trivial:
        inners.append(full)
    for v in inners:
        need = ~v & full
        for u in outers:
            if u & need == need:
                yield Cover(n, k, u, v)
