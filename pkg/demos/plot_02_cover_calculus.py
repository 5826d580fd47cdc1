"""
Strips and semi-optimal covers
==============================

A cover's inner selection splits into strips; the semi-optimal transform
rebuilds the outer part and never grows the cover.
"""

from petersen_cover import Cover, PetersenGraph, is_cover, semi_optimal, stats, strips

g = PetersenGraph(16, 5)
c = Cover.from_indices(16, 5, [2, 3, 5, 6, 7, 9, 11, 13, 15, 16],
                       [1, 2, 3, 4, 7, 8, 10, 11, 12, 14, 16])
print("cover:", is_cover(g, c), "size", c.size)

for s in strips(c):
    print(f"  strip from v{s.start}, {s.size} vertices, odd={s.odd}")

# a = selected inner vertices, b = odd strips
st = stats(c)
print("a =", st.a, "b =", st.b)

# |so(c)| = n + (a - b)/2
so = semi_optimal(g, c)
print("so(c) size", so.size, "=", 16 + (st.a - st.b) // 2)
print("outer part", so.selected_u)
