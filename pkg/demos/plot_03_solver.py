"""
Exact minimum covers
====================

Branch and bound for beta, checked against exhaustive search on small graphs.
"""

from petersen_cover import PetersenGraph, beta_bruteforce, beta_exact, enumerate_min_covers

for n, k in [(5, 2), (9, 3), (16, 5), (13, 4)]:
    res = beta_exact(PetersenGraph(n, k))
    print(f"P({n},{k}) beta={res.beta} nodes={res.nodes} {res.elapsed * 1000:.1f} ms")

# exhaustive search agrees
g = PetersenGraph(11, 4)
print(beta_exact(g).beta, beta_bruteforce(g).beta)

# every minimum cover of the Petersen graph
enum = enumerate_min_covers(PetersenGraph(5, 2))
print(len(enum.covers), "minimum covers of size", enum.beta)
for c in enum.covers[:3]:
    print("  u", c.selected_u, "v", c.selected_v)

# a witness as a certificate
print(beta_exact(PetersenGraph(9, 3)).witness.to_json())
