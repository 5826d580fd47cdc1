"""Exact minimum vertex covers of P(n, k).

``beta_exact`` is a branch-and-bound over the whole graph and knows nothing
about strips; ``beta_bruteforce`` enumerates every cover and serves as its
oracle on small instances.  ``enumerate_min_covers`` lists all minimum covers
for the universally quantified checks.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from itertools import combinations, product

from .constructions import best_construction
from .cover import (
    Cover,
    _so_outer_mask,
    inner_patterns,
    is_cover,
    outer_patterns,
    runs,
)
from .errors import InvariantViolation, ResourceLimitError
from .graph import PetersenGraph

BRUTE_FORCE = "brute-force"
BRANCH_AND_BOUND = "branch-and-bound"

BRUTE_LIMIT = 26  # max 2n for beta_bruteforce
ENUM_LIMIT = 24  # max 2n for enumerate_min_covers
DEFAULT_NODE_BUDGET = 10**8


@dataclass(frozen=True)
class BetaResult:
    n: int
    k: int
    beta: int
    witness: Cover
    method: str
    nodes: int = 0
    elapsed: float = 0.0

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "beta": self.beta,
            "method": self.method,
            "nodes": self.nodes,
            "elapsed": round(self.elapsed, 6),
            "certificate": self.witness.to_certificate(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


@dataclass(frozen=True)
class MinCoverEnumeration:
    n: int
    k: int
    beta: int
    covers: tuple = field(repr=False)


def beta_bruteforce(g: PetersenGraph) -> BetaResult:
    """Exhaustive minimum: pair every cover of the outer cycle with every
    cover of the inner cycles and keep pairs that also cover the spokes.

    Ties go to the lexicographically least sorted vertex-id list.
    """
    n, k = g.n, g.k
    if 2 * n > BRUTE_LIMIT:
        raise ResourceLimitError(f"brute force limited to 2n <= {BRUTE_LIMIT}, got {2 * n}")
    t0 = time.perf_counter()
    full = (1 << n) - 1
    outers = sorted(outer_patterns(n), key=int.bit_count)
    inners = sorted(inner_patterns(n, k), key=int.bit_count)
    inners.append(full)
    best = 2 * n + 1
    found = []
    checked = 0
    for v in inners:
        vc = v.bit_count()
        need = ~v & full
        for u in outers:
            size = vc + u.bit_count()
            if size > best:
                break
            checked += 1
            if u & need == need:
                if size < best:
                    best = size
                    found = []
                found.append(Cover(n, k, u, v))
    witness = min(found, key=Cover.sort_key)
    return BetaResult(n, k, best, witness, BRUTE_FORCE, checked, time.perf_counter() - t0)


class _BudgetExceeded(Exception):
    pass


class _Search:
    """Minimum vertex cover on induced subgraphs, vertex sets as bitsets."""

    def __init__(self, adjacency, node_budget, deadline):
        self.adj = adjacency
        self.node_budget = node_budget
        self.deadline = deadline
        self.nodes = 0

    def matching_bound(self, P):
        adj = self.adj
        free = P
        size = 0
        while free:
            low = free & -free
            free ^= low
            nb = adj[low.bit_length() - 1] & free
            if nb:
                free ^= nb & -nb
                size += 1
        return size

    def components(self, P):
        adj = self.adj
        comps = []
        rest = P
        while rest:
            comp = frontier = rest & -rest
            while frontier:
                reach = 0
                f = frontier
                while f:
                    b = f & -f
                    f ^= b
                    reach |= adj[b.bit_length() - 1]
                frontier = reach & rest & ~comp
                comp |= frontier
            comps.append(comp)
            rest &= ~comp
        return comps

    def solve(self, P, upper):
        """Minimum cover of G[P] as ``(size, mask)`` if smaller than ``upper``."""
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise _BudgetExceeded
        if self.deadline is not None and self.nodes & 1023 == 0:
            if time.perf_counter() > self.deadline:
                raise _BudgetExceeded
        adj = self.adj
        forced = 0
        count = 0
        changed = True
        while changed:
            changed = False
            f = P
            while f:
                b = f & -f
                f ^= b
                if not P & b:
                    continue
                nb = adj[b.bit_length() - 1] & P
                d = nb.bit_count()
                if d == 0:
                    P ^= b
                elif d == 1:
                    # a leaf: its neighbour can always be taken instead
                    forced |= nb
                    count += 1
                    P &= ~(nb | b)
                    changed = True
                elif d == 2:
                    w = nb & -nb
                    if adj[w.bit_length() - 1] & (nb ^ w):
                        # triangle through b: take the other two corners
                        forced |= nb
                        count += 2
                        P &= ~(nb | b)
                        changed = True
        if count >= upper:
            return None
        if not P:
            return count, forced
        room = upper - count
        comps = self.components(P)
        if len(comps) == 1:
            res = self.solve_connected(P, room)
            return None if res is None else (count + res[0], forced | res[1])
        comps.sort(key=int.bit_count)
        bounds = [self.matching_bound(c) for c in comps]
        rest_bound = sum(bounds)
        if rest_bound >= room:
            return None
        total = 0
        mask = forced
        for comp, lb in zip(comps, bounds):
            rest_bound -= lb
            res = self.solve_connected(comp, room - total - rest_bound)
            if res is None:
                return None
            total += res[0]
            mask |= res[1]
        return count + total, mask

    def solve_connected(self, P, upper):
        adj = self.adj
        if self.matching_bound(P) >= upper:
            return None
        pick = -1
        top = -1
        f = P
        while f:
            b = f & -f
            f ^= b
            v = b.bit_length() - 1
            d = (adj[v] & P).bit_count()
            if d > top:
                top, pick = d, v
                if d >= 3:
                    break
        if top <= 2:
            return self._cycle_cover(P, upper)
        nb = adj[pick] & P
        best = None
        dn = nb.bit_count()
        # pick stays out: all its neighbours go in
        if dn < upper:
            res = self.solve(P & ~(nb | (1 << pick)), upper - dn)
            if res is not None:
                best = (res[0] + dn, res[1] | nb)
                upper = best[0]
        if upper > 1:
            res = self.solve(P & ~(1 << pick), upper - 1)
            if res is not None:
                best = (res[0] + 1, res[1] | (1 << pick))
        return best

    def _cycle_cover(self, P, upper):
        # connected, max degree 2 and no leaves left after reduction: a cycle
        adj = self.adj
        start = (P & -P).bit_length() - 1
        order = [start]
        seen = 1 << start
        cur = start
        while True:
            nb = adj[cur] & P & ~seen
            if not nb:
                break
            cur = (nb & -nb).bit_length() - 1
            order.append(cur)
            seen |= 1 << cur
        mask = 0
        for i in range(1, len(order), 2):
            mask |= 1 << order[i]
        if len(order) % 2:
            mask |= 1 << order[-1]
        size = mask.bit_count()
        return (size, mask) if size < upper else None


def beta_exact(
    g: PetersenGraph,
    node_budget: int = DEFAULT_NODE_BUDGET,
    time_budget: float | None = None,
    warm_start: bool = True,
) -> BetaResult:
    """Branch and bound: branch on a vertex of maximum residual degree into
    "out, so its neighbours are in" and "in"; prune with a greedy matching;
    split disconnected residual graphs.  Ties follow vertex-id order, so the
    result is deterministic.
    """
    t0 = time.perf_counter()
    deadline = None if time_budget is None else t0 + time_budget
    search = _Search(g.adjacency, node_budget, deadline)
    if warm_start:
        incumbent = best_construction(g).cover
    else:
        incumbent = Cover.full(g.n, g.k)
    root_bound = search.matching_bound(g.all_mask)
    try:
        res = search.solve(g.all_mask, incumbent.size)
    except _BudgetExceeded:
        raise ResourceLimitError(
            f"P({g.n},{g.k}): budget exhausted after {search.nodes} nodes",
            lower=root_bound,
            upper=incumbent.size,
            witness=incumbent,
        ) from None
    witness = incumbent if res is None else Cover.from_mask(g, res[1])
    if not is_cover(g, witness):
        raise InvariantViolation(f"solver witness for P({g.n},{g.k}) is not a cover")
    return BetaResult(
        g.n,
        g.k,
        witness.size,
        witness,
        BRANCH_AND_BOUND,
        search.nodes,
        time.perf_counter() - t0,
    )


def _path_min_covers(m: int):
    """All minimum vertex covers of a path on m vertices, as offset tuples."""
    need = m // 2
    out = []
    for pick in combinations(range(m), need):
        chosen = set(pick)
        if all(i in chosen or i + 1 in chosen for i in range(m - 1)):
            out.append(pick)
    return out


def enumerate_min_covers(g: PetersenGraph, beta: int | None = None) -> MinCoverEnumeration:
    """Every minimum cover of ``g``.

    A cover selecting inner pattern S must select the twin of every
    unselected inner vertex, and the twins of each strip form a path whose
    edges only they can cover.  So a minimum cover is S plus those forced
    twins plus a minimum cover of every strip's twin path, for those S whose
    best completion reaches ``beta``.
    """
    n, k = g.n, g.k
    if 2 * n > ENUM_LIMIT:
        raise ResourceLimitError(f"min-cover enumeration limited to 2n <= {ENUM_LIMIT}")
    if beta is None:
        beta = beta_exact(g).beta
    full = (1 << n) - 1
    path_cache = {}
    covers = []
    best_seen = None
    for v in inner_patterns(n, k):
        rs = runs(v, n)
        size = n + sum(m // 2 for _, m in rs)
        best_seen = size if best_seen is None else min(best_seen, size)
        if size != beta:
            continue
        forced = ~v & full
        options = []
        for start, m in rs:
            if m not in path_cache:
                path_cache[m] = _path_min_covers(m)
            options.append(
                [sum(1 << ((start - 1 + j) % n) for j in pick) for pick in path_cache[m]]
            )
        for choice in product(*options):
            covers.append(Cover(n, k, forced | sum(choice), v))
    # trivial covers: all of V plus a cover of the outer cycle
    if n + (n + 1) // 2 == beta:
        for u in outer_patterns(n):
            if u.bit_count() == (n + 1) // 2:
                covers.append(Cover(n, k, u, full))
    if best_seen is not None and best_seen < beta:
        raise InvariantViolation(
            f"P({n},{k}): an inner pattern completes to {best_seen} < beta={beta}"
        )
    covers.sort(key=Cover.sort_key)
    return MinCoverEnumeration(n, k, beta, tuple(covers))


def so_completion(v: int, n: int, k: int) -> Cover:
    """Semi-optimal cover with inner pattern ``v`` (U completed canonically)."""
    return Cover(n, k, _so_outer_mask(v, n), v)
