"""
Sweeping the conjecture
=======================

Solve every P(n, k) up to a size, with a resumable cache, then run the
property suites.
"""

import tempfile
from pathlib import Path

from petersen_cover import sweep, verify_theorems

cache = Path(tempfile.mkdtemp()) / "results.jsonl"

# first pass stops early, second pass picks up from the cache
part = sweep(20, cache=cache, stop_after=40)
full = sweep(20, cache=cache)
print(len(part.records), "then", len(full.records), "pairs;", full.reused, "reused")
print("violations:", full.violations or "none")

worst = min(full.records, key=lambda r: (r.conjecture - r.beta, -r.n))
print(f"tightest: P({worst.n},{worst.k}) beta={worst.beta} bound={worst.conjecture}")

rep = verify_theorems(10, samples=100)
for line in rep.lines():
    print(line)
