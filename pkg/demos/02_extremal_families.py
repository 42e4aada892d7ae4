"""
The extremal families and their closed forms
============================================

Each family that turns up as a maximizer has a closed-form evaluator
alongside its constructor.  The closed forms group edges by endpoint
degrees, so they agree with the direct edge-by-edge sum to machine
precision; this script prints both side by side.
"""

from absgraph import (
    abs_index,
    abs_kappa_xy_closed,
    abs_knp_closed,
    abs_kr_join_closed,
    abs_sixpart_closed,
    abs_turan_closed,
    build_kappa_xy,
    build_knp,
    build_kr_join_multipartite,
    build_sixpart,
    build_turan,
    cut_vertex_count,
    sixpart_shape,
    to_graph6,
    turan_parts,
    vertex_connectivity,
)


def row(name, closed, built):
    direct = abs_index(built)
    print(f"{name:<22} closed={closed:.12g}  direct={direct:.12g}  "
          f"gap={abs(closed - direct):.1e}")


# clique with pendants: n >= 2p hangs single pendants, n < 2p is forced
# to extend one pendant into a longer path
for n, p in ((9, 2), (9, 4), (9, 6), (9, 7)):
    g = build_knp(n, p)
    assert cut_vertex_count(g) == p
    row(f"K_{n}^{p}", abs_knp_closed(n, p), g)
print()

# balanced complete multipartite graphs
for n, k in ((10, 2), (10, 3), (11, 4)):
    row(f"T({n},{k}) parts={turan_parts(n, k)}",
        abs_turan_closed(n, k), build_turan(n, k))
print()

# a clique joined onto a balanced multipartite graph
row("K_2 v T(8,3)", abs_kr_join_closed(2, turan_parts(8, 3)),
    build_kr_join_multipartite(2, turan_parts(8, 3)))
print()

# the six-group bipartite blow-up and its connectivity specialization
sizes = (2, 1, 2, 1, 1, 2)
print(f"blow-up {sizes} has shape {sixpart_shape(sizes)!r}")
row(f"blow-up {sizes}", abs_sixpart_closed(sizes), build_sixpart(sizes))
g = build_kappa_xy(4, 2, 1)
print(f"Kbar_1[4,2] = {to_graph6(g)}, connectivity {vertex_connectivity(g)}")
row("Kbar_1[4,2]", abs_kappa_xy_closed(4, 2, 1), g)
