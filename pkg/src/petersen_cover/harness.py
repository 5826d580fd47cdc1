"""Verification campaigns: the conjecture sweep, the theorem property suites,
a resumable JSON-lines results cache and graph/certificate exports.
"""

from __future__ import annotations

import hashlib
import json
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .bounds import bound_report, conjecture_value
from .constructions import reduce_strips, strip_target
from .cover import (
    Cover,
    d_value_bruteforce,
    is_cover,
    is_trivial,
    iter_covers,
    semi_optimal,
    stats,
)
from .errors import ResourceLimitError
from .graph import PetersenGraph, admissible_pairs, rotate
from .solver import DEFAULT_NODE_BUDGET, beta_exact, enumerate_min_covers

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1
SOLVED = "solved"
UNRESOLVED = "unresolved"


def witness_digest(cover: Cover) -> str:
    payload = json.dumps(
        [cover.n, cover.k, cover.selected_u, cover.selected_v], separators=(",", ":")
    )
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


@dataclass
class SweepRecord:
    n: int
    k: int
    status: str
    beta: int | None
    method: str
    lower: int
    min_upper: int
    exact: int | None
    conjecture: int
    conjecture_ok: bool | None
    witness_digest: str
    witness_u: list = field(default_factory=list)
    witness_v: list = field(default_factory=list)
    nodes: int = 0
    elapsed: float = 0.0
    schema: int = SCHEMA_VERSION

    @property
    def key(self):
        return self.n, self.k

    def witness(self) -> Cover:
        return Cover.from_indices(self.n, self.k, self.witness_u, self.witness_v)

    def comparable(self) -> dict:
        """Everything except timing, for determinism checks."""
        d = asdict(self)
        d.pop("elapsed")
        return d

    def problems(self) -> list:
        """Disagreements between the solved value and the bound machinery."""
        out = []
        if self.status != SOLVED:
            return out
        if not self.lower <= self.beta <= self.min_upper:
            out.append(
                f"P({self.n},{self.k}): beta={self.beta} outside [{self.lower}, {self.min_upper}]"
            )
        if self.exact is not None and self.exact != self.beta:
            out.append(f"P({self.n},{self.k}): formula {self.exact} != solver {self.beta}")
        return out


def solve_pair(n: int, k: int, node_budget: int = DEFAULT_NODE_BUDGET) -> SweepRecord:
    g = PetersenGraph(n, k)
    rep = bound_report(n, k)
    exact = None if rep.exact is None else rep.exact.value
    conj = conjecture_value(n)
    t0 = time.perf_counter()
    try:
        res = beta_exact(g, node_budget=node_budget)
    except ResourceLimitError as err:
        w = err.witness
        return SweepRecord(
            n, k, UNRESOLVED, None, "branch-and-bound", max(rep.lower, err.lower or 0),
            min(rep.min_upper, err.upper or rep.min_upper), exact, conj, None,
            witness_digest(w), w.selected_u, w.selected_v, node_budget,
            time.perf_counter() - t0,
        )
    w = res.witness
    return SweepRecord(
        n, k, SOLVED, res.beta, res.method, rep.lower, rep.min_upper, exact, conj,
        res.beta <= conj, witness_digest(w), w.selected_u, w.selected_v, res.nodes,
        res.elapsed,
    )


class ResultsCache:
    """Append-only JSON-lines store of sweep records, one per (n, k).

    Records from another schema version, or whose stored witness does not
    re-validate, are ignored on load and get recomputed.
    """

    def __init__(self, path):
        self.path = Path(path)
        self.records = {}
        self.rejected = 0
        if self.path.exists():
            self._load()

    def _load(self):
        with self.path.open() as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                try:
                    raw = json.loads(line)
                except json.JSONDecodeError:
                    self.rejected += 1
                    continue
                if raw.get("schema") != SCHEMA_VERSION:
                    continue
                try:
                    rec = SweepRecord(**raw)
                except TypeError:
                    self.rejected += 1
                    continue
                if self._valid(rec):
                    self.records[rec.key] = rec
                else:
                    self.rejected += 1

    @staticmethod
    def _valid(rec: SweepRecord) -> bool:
        if rec.status != SOLVED:
            return False  # unresolved pairs are retried
        try:
            w = rec.witness()
        except ValueError:
            return False
        g = PetersenGraph(rec.n, rec.k)
        return is_cover(g, w) and w.size == rec.beta and witness_digest(w) == rec.witness_digest

    def get(self, n, k):
        return self.records.get((n, k))

    def append(self, rec: SweepRecord):
        if rec.key in self.records:
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a") as fh:
            fh.write(json.dumps(asdict(rec)) + "\n")
        self.records[rec.key] = rec


@dataclass
class SweepSummary:
    max_n: int
    records: list
    violations: list
    failures: list
    unresolved: list
    reused: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations and not self.failures

    def to_dict(self) -> dict:
        return {
            "max_n": self.max_n,
            "pairs": len(self.records),
            "violations": self.violations,
            "failures": self.failures,
            "unresolved": self.unresolved,
            "reused_from_cache": self.reused,
        }


def _solve_args(args):
    return solve_pair(*args)


def sweep(
    max_n: int,
    cache=None,
    jobs: int = 1,
    node_budget: int = DEFAULT_NODE_BUDGET,
    min_n: int = 3,
    stop_after: int | None = None,
) -> SweepSummary:
    """Solve every admissible (n, k) with ``min_n <= n <= max_n``.

    ``cache`` may be a path or a ``ResultsCache``.  ``stop_after`` ends the run
    after that many fresh solves (used to simulate an interrupted run).
    """
    if max_n < 3:
        raise ValueError(f"max_n must be at least 3, got {max_n}")
    if cache is not None and not isinstance(cache, ResultsCache):
        cache = ResultsCache(cache)
    pairs = list(admissible_pairs(max_n, min_n))
    done = {}
    todo = []
    for n, k in pairs:
        rec = cache.get(n, k) if cache is not None else None
        if rec is not None:
            done[(n, k)] = rec
        else:
            todo.append((n, k, node_budget))
    reused = len(done)
    if stop_after is not None:
        todo = todo[:stop_after]
    if jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            fresh = pool.map(_solve_args, todo, chunksize=1)
            for rec in fresh:
                _finish(rec, done, cache)
    else:
        for args in todo:
            _finish(solve_pair(*args), done, cache)
    records = [done[p] for p in pairs if p in done]
    violations = [
        f"P({r.n},{r.k}): beta={r.beta} > {r.conjecture}"
        for r in records
        if r.status == SOLVED and not r.conjecture_ok
    ]
    failures = [msg for r in records for msg in r.problems()]
    unresolved = [f"P({r.n},{r.k})" for r in records if r.status != SOLVED]
    return SweepSummary(max_n, records, violations, failures, unresolved, reused)


def _finish(rec, done, cache):
    log.debug("P(%d,%d) beta=%s nodes=%d", rec.n, rec.k, rec.beta, rec.nodes)
    done[rec.key] = rec
    if cache is not None and rec.status == SOLVED:
        cache.append(rec)


# theorem property suites

SEMI_OPTIMAL = "semi-optimal"
D_INVARIANT = "d-invariant"
STRIP_BOUND = "strip-bound"
REDUCE_STRIPS = "reduce-strips"
BIPARTITE = "bipartite"
REMARK = "non-minimum-attains-d"
SUITES = (SEMI_OPTIMAL, D_INVARIANT, STRIP_BOUND, REDUCE_STRIPS, BIPARTITE, REMARK)

EXHAUSTIVE_SO_LIMIT = 20  # max 2n for checking every cover


def random_nontrivial_cover(g: PetersenGraph, rng: random.Random) -> Cover:
    """A random non-trivial cover: random subset, then random repair."""
    n, k = g.n, g.k
    full = (1 << n) - 1
    u = rng.getrandbits(n)
    v = rng.getrandbits(n)
    if v == full:
        v ^= 1 << rng.randrange(n)
    # spokes: the unselected inner vertices of a non-trivial cover stay so
    u |= ~v & full
    # V-edges: fix by adding the endpoint that keeps v non-trivial
    while True:
        nv = ~v & full
        bad = nv & rotate(nv, k, n)
        if not bad:
            break
        low = bad & -bad
        i = low.bit_length() - 1
        j = (i - k) % n
        pick = i if rng.random() < 0.5 else j
        if v | (1 << pick) == full:
            pick = j if pick == i else i
        v |= 1 << pick
    while True:
        nu = ~u & full
        bad = nu & rotate(nu, 1, n)
        if not bad:
            break
        i = (bad & -bad).bit_length() - 1
        pick = i if rng.random() < 0.5 else (i - 1) % n
        u |= 1 << pick
    return Cover(n, k, u, v)


def two_coloring(g: PetersenGraph):
    """Generic BFS 2-colouring; returns a colour list or None if impossible."""
    color = [-1] * g.order
    for s in range(g.order):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = [s]
        while queue:
            x = queue.pop()
            nb = g.adjacency[x]
            for y in range(g.order):
                if nb >> y & 1:
                    if color[y] == -1:
                        color[y] = 1 - color[x]
                        queue.append(y)
                    elif color[y] == color[x]:
                        return None
    return color


def _cycle_is_closed_walk(g: PetersenGraph, cyc) -> bool:
    ids = [g.vid(v) for v in cyc]
    return len(set(ids)) == len(ids) and all(
        g.adjacency[a] >> b & 1 for a, b in zip(ids, ids[1:] + ids[:1])
    )


@dataclass
class TheoremReport:
    max_n: int
    checks: dict = field(default_factory=lambda: {s: 0 for s in SUITES})
    failures: dict = field(default_factory=lambda: {s: [] for s in SUITES})
    skipped: dict = field(default_factory=lambda: {s: 0 for s in SUITES})
    reduce_iterations_max: int = 0

    @property
    def ok(self) -> bool:
        return not any(self.failures.values())

    def fail(self, suite, msg):
        self.failures[suite].append(msg)

    def lines(self):
        for s in SUITES:
            state = "PASS" if not self.failures[s] else "FAIL"
            yield f"{state} {s}: {self.checks[s]} checks, {len(self.failures[s])} failures"

    def to_dict(self) -> dict:
        return {
            "max_n": self.max_n,
            "ok": self.ok,
            "checks": self.checks,
            "failures": self.failures,
            "skipped": self.skipped,
        }


def check_semi_optimal(g: PetersenGraph, c: Cover):
    """None if the semi-optimal transform behaves on ``c``, else a message."""
    so = semi_optimal(g, c)
    st = stats(c)
    if not is_cover(g, so):
        return f"P({g.n},{g.k}): so(c) is not a cover for c={c.selected_u}/{c.selected_v}"
    if so.v != c.v:
        return f"P({g.n},{g.k}): so(c) changed the inner selection"
    if (st.a - st.b) % 2 or so.size != g.n + (st.a - st.b) // 2:
        return f"P({g.n},{g.k}): |so(c)|={so.size} but a={st.a}, b={st.b}"
    if so.size > c.size:
        return f"P({g.n},{g.k}): |so(c)|={so.size} > |c|={c.size}"
    return None


def verify_theorems(max_n: int, samples: int = 200, seed: int = 0) -> TheoremReport:
    """Run the property suites on every admissible pair with n <= ``max_n``.

    Enumeration-based suites apply only inside their size guards; pairs
    outside are counted under ``skipped``.
    """
    rep = TheoremReport(max_n)
    rng = random.Random(seed)
    for n, k in admissible_pairs(max_n):
        g = PetersenGraph(n, k)
        beta_res = beta_exact(g)
        beta = beta_res.beta
        d = 2 * (beta - n)

        # semi-optimal contraction and the size equation
        if 2 * n <= EXHAUSTIVE_SO_LIMIT:
            covers = (c for c in iter_covers(g))
        else:
            covers = (random_nontrivial_cover(g, rng) for _ in range(samples))
        for c in covers:
            rep.checks[SEMI_OPTIMAL] += 1
            msg = check_semi_optimal(g, c)
            if msg:
                rep.fail(SEMI_OPTIMAL, msg)

        # d-invariant, strip-size law and the converse remark
        try:
            dv = d_value_bruteforce(g)
            enum = enumerate_min_covers(g, beta)
        except ResourceLimitError:
            for s in (D_INVARIANT, STRIP_BOUND, REMARK):
                rep.skipped[s] += 1
        else:
            rep.checks[D_INVARIANT] += 1
            if dv.d != d:
                rep.fail(D_INVARIANT, f"P({n},{k}): d={dv.d} but 2(beta-n)={d}")
            limit = 2 * k if k % 2 else 2 * k + 1
            for c in enum.covers:
                if c.size != beta or not is_cover(g, c):
                    rep.fail(D_INVARIANT, f"P({n},{k}): bad enumerated cover")
                    continue
                st = stats(c)
                rep.checks[D_INVARIANT] += 1
                if st.a - st.b != dv.d:
                    rep.fail(D_INVARIANT, f"P({n},{k}): min cover with a-b={st.a - st.b} != d")
                rep.checks[STRIP_BOUND] += 1
                if max(st.strip_sizes, default=0) > limit:
                    rep.fail(STRIP_BOUND, f"P({n},{k}): min cover strip {max(st.strip_sizes)}")
            rep.checks[REMARK] += 1
            extra = non_minimum_attaining_d(g, enum.covers[0], dv.d)
            if extra is None:
                rep.fail(REMARK, f"P({n},{k}): no non-minimum cover with a-b=d found")

        # existence of a minimum cover with short strips
        rep.checks[REDUCE_STRIPS] += 1
        try:
            red = reduce_strips(g, beta_res.witness)
        except Exception as err:  # noqa: BLE001 - reported as a suite failure
            rep.fail(REDUCE_STRIPS, f"P({n},{k}): {err}")
        else:
            rep.reduce_iterations_max = max(rep.reduce_iterations_max, red.iterations)
            c = red.cover
            if c.size != beta or not is_cover(g, c) or red.max_strip > strip_target(k):
                rep.fail(REDUCE_STRIPS, f"P({n},{k}): reduced cover size {c.size}, strip {red.max_strip}")

        # bipartiteness characterisation
        rep.checks[BIPARTITE] += 1
        chk = g.is_bipartite()
        expect = n % 2 == 0 and k % 2 == 1
        generic = two_coloring(g) is not None
        if chk.bipartite != expect or generic != expect:
            rep.fail(BIPARTITE, f"P({n},{k}): closed form {chk.bipartite}, BFS {generic}")
        elif chk.bipartite:
            part = g.mask_of(chk.part)
            if any((part >> a & 1) == (part >> b & 1) for a, b, _ in g.edges):
                rep.fail(BIPARTITE, f"P({n},{k}): bipartition witness has an inner edge")
        elif len(chk.odd_cycle) % 2 == 0 or not _cycle_is_closed_walk(g, chk.odd_cycle):
            rep.fail(BIPARTITE, f"P({n},{k}): odd-cycle witness invalid")
    return rep


def non_minimum_attaining_d(g: PetersenGraph, min_cover: Cover, d: int):
    """A cover larger than the minimum whose a - b still equals d."""
    full = (1 << g.n) - 1
    spare = ~min_cover.u & full
    if not spare:
        return None
    c = Cover(g.n, g.k, min_cover.u | (spare & -spare), min_cover.v)
    if is_trivial(c) or not is_cover(g, c):
        return None
    st = stats(c)
    if st.a - st.b != d or c.size <= min_cover.size:
        return None
    return c


# exports

FORMATS = ("dimacs", "json", "certificate")


def export(n: int, k: int, fmt: str, cover: Cover | None = None, out=None) -> str:
    """Render P(n, k) (or a cover certificate) and optionally write it to ``out``."""
    g = PetersenGraph(n, k)
    if fmt == "dimacs":
        text = g.to_dimacs()
    elif fmt == "json":
        data = g.to_json_dict()
        if cover is not None:
            data["certificate"] = cover.to_certificate()
        text = json.dumps(data, indent=2) + "\n"
    elif fmt == "certificate":
        if cover is None:
            raise ValueError("certificate export needs a cover")
        text = json.dumps(cover.to_certificate(), indent=2) + "\n"
    else:
        raise ValueError(f"unknown export format {fmt!r}; choose from {', '.join(FORMATS)}")
    if out is not None:
        Path(out).write_text(text)
    return text
