"""
Explicit covers
===============

The closed-form constructions, tiling, and strip reduction.
"""

from petersen_cover import PetersenGraph, best_construction, beta_exact, reduce_strips, strips
from petersen_cover.constructions import applicable_constructions, strip_target

for n, k in [(16, 5), (15, 5), (11, 1), (21, 4), (30, 7)]:
    g = PetersenGraph(n, k)
    print(f"P({n},{k})")
    for res in applicable_constructions(g):
        print(f"  {res.method:20s} {res.detail:6s} size {res.size:3d} claimed {res.claimed_bound}")
    print("  best:", best_construction(g).method)

# minimum covers can always be rearranged to have short strips
g = PetersenGraph(12, 4)
w = beta_exact(g).witness
red = reduce_strips(g, w)
print("strips", [s.size for s in strips(red.cover)], "target", strip_target(4))
