"""Generalized Petersen graphs P(n, k).

Vertices are ``u_1..u_n`` (outer cycle) and ``v_1..v_n`` (inner vertices);
edges are ``u_i u_{i+1}``, the spokes ``u_i v_i`` and ``v_i v_{i+k}``, with
all subscripts taken circularly in ``1..n``.

Internally a vertex is an integer id: ``u_i -> i - 1`` and ``v_i -> n + i - 1``.
Vertex sets are passed around as Python ints used as bitsets over these ids.
Everything user facing (``Vertex``, exports, certificates) is 1-based.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd
from typing import NamedTuple

from .errors import ParameterError

OUTER = "u"
INNER = "v"

U_EDGE = "u-edge"
SPOKE = "spoke"
V_EDGE = "v-edge"


class Vertex(NamedTuple):
    side: str  # OUTER or INNER
    index: int  # 1..n

    def __str__(self):
        return f"{self.side}{self.index}"


class Edge(NamedTuple):
    a: Vertex
    b: Vertex
    kind: str


def check_params(n: int, k: int) -> None:
    if not (isinstance(n, int) and isinstance(k, int)):
        raise ParameterError(f"n and k must be integers, got {n!r}, {k!r}")
    if k < 1:
        raise ParameterError(f"k must be at least 1, got k={k}")
    if n <= 2 * k:
        raise ParameterError(f"P(n,k) needs n > 2k, got n={n}, k={k}")


def admissible_pairs(max_n: int, min_n: int = 3):
    """All admissible (n, k) with ``min_n <= n <= max_n``, n then k ascending."""
    for n in range(max(min_n, 3), max_n + 1):
        for k in range(1, (n - 1) // 2 + 1):
            yield n, k


def rotate(mask: int, shift: int, n: int) -> int:
    """Cyclically move bit ``i`` of an n-bit mask to bit ``(i + shift) mod n``."""
    shift %= n
    full = (1 << n) - 1
    return ((mask << shift) | (mask >> (n - shift))) & full


@dataclass(frozen=True)
class BipartiteCheck:
    bipartite: bool
    part: frozenset | None = None  # one side of the bipartition, as Vertex objects
    odd_cycle: tuple | None = None  # closed walk u.. listed once, no repeat


@dataclass(frozen=True)
class PetersenGraph:
    n: int
    k: int
    g: int = field(init=False)
    edges: tuple = field(init=False, repr=False)
    adjacency: tuple = field(init=False, repr=False)

    def __post_init__(self):
        check_params(self.n, self.k)
        n, k = self.n, self.k
        u_edges = [tuple(sorted((i, (i + 1) % n))) for i in range(n)]
        spokes = [(i, n + i) for i in range(n)]
        v_pairs = sorted(tuple(sorted((i, (i + k) % n))) for i in range(n))
        v_edges = [(n + a, n + b) for a, b in v_pairs]
        ids = (
            [(a, b, U_EDGE) for a, b in u_edges]
            + [(a, b, SPOKE) for a, b in spokes]
            + [(a, b, V_EDGE) for a, b in v_edges]
        )
        adj = [0] * (2 * n)
        for a, b, _ in ids:
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        object.__setattr__(self, "g", gcd(n, k))
        object.__setattr__(self, "edges", tuple(ids))
        object.__setattr__(self, "adjacency", tuple(adj))

    # vertex id helpers

    @property
    def order(self) -> int:
        return 2 * self.n

    @property
    def all_mask(self) -> int:
        return (1 << (2 * self.n)) - 1

    def norm(self, index: int) -> int:
        """Reduce an arbitrary integer subscript into ``1..n``."""
        return (index - 1) % self.n + 1

    def vid(self, v: Vertex) -> int:
        idx = self.norm(v.index)
        if v.side == OUTER:
            return idx - 1
        if v.side == INNER:
            return self.n + idx - 1
        raise ValueError(f"unknown side {v.side!r}")

    def vertex(self, vid: int) -> Vertex:
        if not 0 <= vid < 2 * self.n:
            raise ValueError(f"vertex id {vid} out of range for P({self.n},{self.k})")
        if vid < self.n:
            return Vertex(OUTER, vid + 1)
        return Vertex(INNER, vid - self.n + 1)

    def u(self, index: int) -> Vertex:
        return Vertex(OUTER, self.norm(index))

    def v(self, index: int) -> Vertex:
        return Vertex(INNER, self.norm(index))

    def vertices(self):
        return [self.vertex(i) for i in range(2 * self.n)]

    def edge_list(self):
        """Edges as ``Edge`` records in canonical order."""
        return [Edge(self.vertex(a), self.vertex(b), kind) for a, b, kind in self.edges]

    def neighbors(self, v: Vertex):
        mask = self.adjacency[self.vid(v)]
        return [self.vertex(i) for i in range(2 * self.n) if mask >> i & 1]

    def degree(self, v: Vertex) -> int:
        return self.adjacency[self.vid(v)].bit_count()

    def mask_of(self, vertices) -> int:
        mask = 0
        for v in vertices:
            mask |= 1 << self.vid(v)
        return mask

    def vertices_of(self, mask: int):
        return [self.vertex(i) for i in range(2 * self.n) if mask >> i & 1]

    # structure

    def twin(self, v: Vertex) -> Vertex:
        return Vertex(INNER if v.side == OUTER else OUTER, self.norm(v.index))

    def inner_cycles(self):
        """The ``gcd(n, k)`` cycles of the inner vertices.

        Each cycle starts at its smallest index and walks by ``+k``; cycles
        are ordered by their smallest index, so the one through ``v_1`` is
        first.
        """
        cycles = []
        for start in range(1, self.g + 1):
            cyc = []
            i = start
            while True:
                cyc.append(Vertex(INNER, i))
                i = self.norm(i + self.k)
                if i == start:
                    break
            cycles.append(tuple(cyc))
        return cycles

    def sector(self, start: int, m: int) -> frozenset:
        """The m-sector ``{u_{start+1..start+m}} | {v_{start+1..start+m}}``."""
        if not 1 <= m <= self.n:
            raise ValueError(f"sector size must be in 1..{self.n}, got {m}")
        out = set()
        for j in range(start + 1, start + m + 1):
            out.add(self.u(j))
            out.add(self.v(j))
        return frozenset(out)

    def is_bipartite(self) -> BipartiteCheck:
        n, k = self.n, self.k
        if n % 2 == 0 and k % 2 == 1:
            part = frozenset(
                [self.u(i) for i in range(1, n + 1, 2)]
                + [self.v(i + 1) for i in range(1, n + 1, 2)]
            )
            return BipartiteCheck(True, part=part)
        if n % 2 == 1:
            return BipartiteCheck(False, odd_cycle=tuple(self.u(i) for i in range(1, n + 1)))
        # n and k even: u1 v1 v_{k+1} u_{k+1} u_k ... u_2
        cyc = [self.u(1), self.v(1), self.v(k + 1), self.u(k + 1)]
        cyc += [self.u(i) for i in range(k, 1, -1)]
        return BipartiteCheck(False, odd_cycle=tuple(cyc))

    # exports

    def to_dimacs(self) -> str:
        """DIMACS edge format; ``u_i -> i`` and ``v_i -> n + i``."""
        lines = [
            f"c generalized Petersen graph P({self.n},{self.k})",
            f"p edge {2 * self.n} {len(self.edges)}",
        ]
        lines += [f"e {a + 1} {b + 1}" for a, b, _ in self.edges]
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "vertices": [
                {"id": i + 1, "side": v.side, "index": v.index}
                for i, v in enumerate(self.vertices())
            ],
            "edges": [
                {"source": a + 1, "target": b + 1, "kind": kind}
                for a, b, kind in self.edges
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


def build_graph(n: int, k: int) -> PetersenGraph:
    return PetersenGraph(n, k)


def twin(g: PetersenGraph, v: Vertex) -> Vertex:
    return g.twin(v)


def inner_cycles(g: PetersenGraph):
    return g.inner_cycles()


def sector(g: PetersenGraph, start: int, m: int) -> frozenset:
    return g.sector(start, m)


def is_bipartite(g: PetersenGraph) -> BipartiteCheck:
    return g.is_bipartite()


def read_dimacs(text: str):
    """Parse DIMACS edge format into ``(num_vertices, [(a, b), ...])``, 1-based."""
    num_vertices = None
    edges = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise ValueError(f"bad problem line: {line!r}")
            num_vertices = int(parts[2])
        elif parts[0] == "e":
            edges.append((int(parts[1]), int(parts[2])))
        else:
            raise ValueError(f"unrecognized DIMACS line: {line!r}")
    if num_vertices is None:
        raise ValueError("missing 'p edge' line")
    return num_vertices, edges
