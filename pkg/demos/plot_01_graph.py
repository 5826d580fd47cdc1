"""
Building P(n, k)
================

Outer cycle, spokes, inner cycles and the bipartite test.
"""

from petersen_cover import PetersenGraph

# the Petersen graph itself is P(5, 2)
g = PetersenGraph(5, 2)
print(g, "order", g.order, "edges", len(g.edges))
for e in g.edge_list()[:6]:
    print(" ", e.a, e.b, e.kind)

# gcd(n, k) inner cycles
g = PetersenGraph(12, 4)
for cyc in g.inner_cycles():
    print(" ".join(str(v) for v in cyc))

# bipartite exactly when n is even and k odd
for n, k in [(16, 5), (9, 3), (10, 4)]:
    chk = PetersenGraph(n, k).is_bipartite()
    witness = "" if chk.bipartite else " odd cycle " + " ".join(map(str, chk.odd_cycle))
    print(f"P({n},{k}) bipartite={chk.bipartite}{witness}")

# DIMACS for external solvers
print(PetersenGraph(5, 2).to_dimacs())
