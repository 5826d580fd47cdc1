"""Closed-form bounds and exact values for beta(P(n, k))."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from math import ceil, gcd
from typing import NamedTuple

from . import constructions as cons
from .errors import InvariantViolation
from .graph import PetersenGraph, check_params


class UpperBound(NamedTuple):
    method: str
    value: int
    detail: str = ""


class ExactValue(NamedTuple):
    value: int
    formulas: tuple  # every formula that applied; they agree


def conjecture_value(n: int) -> int:
    return n + ceil(n / 5)


def lower_bound(n: int, k: int) -> int:
    check_params(n, k)
    g = gcd(n, k)
    best = n  # the n spokes form a matching
    if n % 2:
        best = max(best, n + (g + 1) // 2, n + 1)
    special = (n % 2 == 0 and k % 2 == 1) or (n % 2 == 1 and k == 1) or (n, k) == (5, 2)
    if not special:
        best = max(best, n + 2)
    return best


def _exact_candidates(n: int, k: int):
    out = []
    if k == 1:
        out.append(("k=1", n if n % 2 == 0 else n + 1))
    if k == 2:
        out.append(("k=2", n + ceil(n / 5)))
    if k == 3:
        out.append(("k=3", n if n % 2 == 0 else n + 2))
    if n % 2 == 0 and k % 2 == 1:
        out.append(("n-even-k-odd", n))
    if n % 2 == 1 and k % 2 == 1 and n % k == 0:
        out.append(("k-divides-n", n + (k + 1) // 2))
    if n == 2 * k + 1:
        out.append(("n=2k+1", n + ceil(n / 5)))
    return out


def exact_formula(n: int, k: int) -> ExactValue | None:
    check_params(n, k)
    cands = _exact_candidates(n, k)
    if not cands:
        return None
    values = {v for _, v in cands}
    if len(values) > 1:
        raise InvariantViolation(f"exact formulas disagree on P({n},{k}): {cands}")
    return ExactValue(values.pop(), tuple(tag for tag, _ in cands))


@lru_cache(maxsize=None)
def known_beta(n: int, k: int) -> int:
    """beta from a formula when one applies, otherwise from the exact solver."""
    ex = exact_formula(n, k)
    if ex is not None:
        return ex.value
    from .solver import beta_exact

    return beta_exact(PetersenGraph(n, k)).beta


def upper_bounds(n: int, k: int):
    check_params(n, k)
    g = gcd(n, k)
    out = []
    if n % 2 == 0 and k % 2 == 1:
        out.append(UpperBound(cons.BIPARTITE, n))
    if k == 1 and n % 2 == 1:
        out.append(UpperBound(cons.K1, n + 1))
    if n % 2 == 1 and k % 2 == 1:
        out.append(UpperBound(cons.ODD_ODD, n + (k + 1) // 2))
    out.append(
        UpperBound(
            cons.ALTERNATING_CYCLES,
            cons.alternating_cycles_bound(n, k),
            "n/(n,k) odd" if (n // g) % 2 else "n/(n,k) even",
        )
    )
    for m in cons.tiling_sizes(k):
        base = known_beta(m, k % m)
        if n % m == 0:
            out.append(UpperBound(cons.TILED_EXACT, n // m * base, f"m={m}"))
        else:
            out.append(UpperBound(cons.TILED_PADDED, n // m * base + 2 * k, f"m={m}"))
    if k % 2 == 0 and k >= 4:
        out.append(UpperBound(cons.EVEN_K, cons.even_k_bound(n, k), f"m={k - 1}"))
    out.append(UpperBound(cons.FALLBACK, n + (n + 1) // 2))
    return out


@dataclass(frozen=True)
class BoundReport:
    n: int
    k: int
    lower: int
    uppers: tuple
    exact: ExactValue | None
    conjecture: int
    notes: tuple = field(default=())

    @property
    def min_upper(self) -> int:
        return min(b.value for b in self.uppers)

    @property
    def best_upper(self) -> UpperBound:
        return min(self.uppers, key=lambda b: b.value)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "lower": self.lower,
            "uppers": [b._asdict() for b in self.uppers],
            "min_upper": self.min_upper,
            "exact": None
            if self.exact is None
            else {"value": self.exact.value, "formulas": list(self.exact.formulas)},
            "conjecture": self.conjecture,
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def csv_row(self) -> str:
        exact = "" if self.exact is None else str(self.exact.value)
        return f"{self.n},{self.k},{self.lower},{exact},{self.min_upper},{self.conjecture}"


CSV_HEADER = "n,k,lower,exact,min_upper,conjecture"


def bound_report(n: int, k: int) -> BoundReport:
    lower = lower_bound(n, k)
    uppers = tuple(upper_bounds(n, k))
    exact = exact_formula(n, k)
    notes = []
    if k == 4:
        notes.append("k=4: no closed-form bound meets n+ceil(n/5); solver only")
    rep = BoundReport(n, k, lower, uppers, exact, conjecture_value(n), tuple(notes))
    if lower > rep.min_upper:
        raise InvariantViolation(f"P({n},{k}): lower {lower} > min upper {rep.min_upper}")
    if exact is not None and not lower <= exact.value <= rep.min_upper:
        raise InvariantViolation(
            f"P({n},{k}): exact {exact.value} outside [{lower}, {rep.min_upper}]"
        )
    return rep
