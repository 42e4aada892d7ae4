"""
Computing the index on small graphs
===================================

The index at work here assigns each edge uv the weight
sqrt(1 - 2/(d(u) + d(v))) and sums over all edges.  A single edge
weighs zero (both endpoints have degree 1), so the smallest graph
with a positive value is the path on three vertices.
"""

from collections import Counter

from absgraph import (
    abs_index,
    add_edge,
    build_complete,
    build_complete_bipartite,
    build_path,
    degree_pairs,
    from_graph6,
    relabel,
)

# paths: two light end edges, the rest identical middle edges
for n in range(2, 8):
    print(f"P_{n}:  {abs_index(build_path(n)):.12g}")
print()

# complete graphs: every edge weighs sqrt((n-2)/(n-1))
for n in range(2, 8):
    print(f"K_{n}:  {abs_index(build_complete(n)):.12g}")
print()

# the edge weight depends only on the endpoint degrees, so the whole
# value is determined by the degree-pair census
g = build_complete_bipartite(3, 4)
print("K_{3,4} degree pairs:", dict(Counter(degree_pairs(g))))
print("K_{3,4} value:       ", f"{abs_index(g):.12g}")
print()

# relabeling never changes the value, bit for bit
h = relabel(g, [6, 2, 5, 0, 4, 1, 3])
print("relabeled K_{3,4}:   ", f"{abs_index(h):.12g}")
print()

# adding any edge to a connected graph strictly increases the value
g = from_graph6("DBg")  # the path on five vertices
while g.m < 10:
    u, v = next((u, v) for u in range(5) for v in range(u + 1, 5)
                if not g.has_edge(u, v))
    g = add_edge(g, u, v)
    print(f"m={g.m:2d}  value={abs_index(g):.12g}")
