"""Independent reference computations used only by the tests.

These work on plain vertex lists and edge lists and do not touch the
package's bitset code paths.
"""

from itertools import combinations


def petersen_edges(n, k):
    """Edge list with u_i -> ("u", i) and v_i -> ("v", i), i in 1..n."""
    def w(i):
        return (i - 1) % n + 1

    edges = set()
    for i in range(1, n + 1):
        edges.add(frozenset({("u", i), ("u", w(i + 1))}))
        edges.add(frozenset({("u", i), ("v", i)}))
        edges.add(frozenset({("v", i), ("v", w(i + k))}))
    return edges


def all_vertices(n):
    return [("u", i) for i in range(1, n + 1)] + [("v", i) for i in range(1, n + 1)]


def covers(chosen, edges):
    return all(e & chosen for e in edges)


def min_cover_size(n, k):
    """Smallest cover size by trying subsets in increasing size."""
    edges = petersen_edges(n, k)
    verts = all_vertices(n)
    for size in range(len(verts) + 1):
        for pick in combinations(verts, size):
            if covers(set(pick), edges):
                return size
    raise AssertionError("unreachable")


def all_covers(n, k):
    edges = petersen_edges(n, k)
    verts = all_vertices(n)
    out = []
    for mask in range(1 << (2 * n)):
        chosen = {verts[i] for i in range(2 * n) if mask >> i & 1}
        if covers(chosen, edges):
            out.append(frozenset(chosen))
    return out


def strip_sizes(inner, n):
    """Sizes of maximal circular runs of selected inner indices (not all of 1..n)."""
    bits = [i in inner for i in range(1, n + 1)]
    assert not all(bits)
    # rotate so position 0 is unselected
    z = bits.index(False)
    bits = bits[z:] + bits[:z]
    sizes, run = [], 0
    for b in bits + [False]:
        if b:
            run += 1
        elif run:
            sizes.append(run)
            run = 0
    return sorted(sizes)


def bfs_bipartite(n, k):
    edges = petersen_edges(n, k)
    adj = {v: set() for v in all_vertices(n)}
    for e in edges:
        a, b = tuple(e)
        adj[a].add(b)
        adj[b].add(a)
    color = {}
    for s in adj:
        if s in color:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in color:
                    color[y] = 1 - color[x]
                    stack.append(y)
                elif color[y] == color[x]:
                    return False
    return True
