"""Extremal graph families and closed-form ABS values.

Each family comes as a builder returning a concrete labeled graph and,
where a closed form exists, a companion evaluating the ABS value from
the degree-pair census alone.  Builders and closed forms are kept
independent so they can be checked against each other.
"""

from dataclasses import dataclass

from .graph import Graph, from_edges, join
from .absindex import abs_from_degree_pairs, edge_weight, weight_of_sum


def _check_parts(parts) -> tuple[int, ...]:
    parts = tuple(int(t) for t in parts)
    if len(parts) < 2:
        raise ValueError("need at least 2 parts")
    if any(t < 1 for t in parts):
        raise ValueError(f"all part sizes must be >= 1, got {parts}")
    return parts


def build_path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return from_edges(n, ((v, v + 1) for v in range(n - 1)))


def abs_path_closed(n: int) -> float:
    if n < 1:
        raise ValueError("path needs n >= 1")
    if n <= 2:
        return 0.0
    return 2 * edge_weight(1, 2) + (n - 3) * edge_weight(2, 2)


def build_complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def abs_complete_closed(n: int) -> float:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    if n == 1:
        return 0.0
    return n * (n - 1) // 2 * edge_weight(n - 1, n - 1)


def build_complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("complete bipartite graph needs both sides >= 1")
    return from_edges(a + b, ((u, a + v) for u in range(a) for v in range(b)))


def build_complete_multipartite(parts) -> Graph:
    parts = _check_parts(parts)
    offsets = [0]
    for t in parts:
        offsets.append(offsets[-1] + t)
    n = offsets[-1]
    edges = []
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            edges.extend((u, v)
                         for u in range(offsets[i], offsets[i + 1])
                         for v in range(offsets[j], offsets[j + 1]))
    return from_edges(n, edges)


def abs_multipartite_closed(parts) -> float:
    """ABS of the complete multipartite graph with the given part sizes.

    A vertex in a part of size t has degree n - t, so an edge between
    parts of sizes t_i and t_j carries weight sqrt(1 - 2/(2n - t_i - t_j)).
    """
    parts = _check_parts(parts)
    n = sum(parts)
    pairs = {}
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            key = (n - parts[i], n - parts[j])
            pairs[key] = pairs.get(key, 0) + parts[i] * parts[j]
    return abs_from_degree_pairs(pairs)


def turan_parts(n: int, k: int) -> tuple[int, ...]:
    """Balanced part sizes of the Turan graph T(n, k), ascending."""
    if not 2 <= k <= n:
        raise ValueError(f"Turan graph needs 2 <= k <= n, got k={k}, n={n}")
    t, s = divmod(n, k)
    return (t,) * (k - s) + (t + 1,) * s


def build_turan(n: int, k: int) -> Graph:
    return build_complete_multipartite(turan_parts(n, k))


def abs_turan_closed(n: int, k: int) -> float:
    return abs_multipartite_closed(turan_parts(n, k))


def build_kr_join_multipartite(r: int, parts) -> Graph:
    """K_r joined to the complete multipartite graph with the given parts."""
    if r < 1:
        raise ValueError("join needs r >= 1")
    return join(build_complete(r), build_complete_multipartite(parts))


def abs_kr_join_closed(r: int, parts) -> float:
    """Closed ABS value of K_r joined to a complete multipartite graph.

    Join vertices have degree n - 1, part-i vertices degree n - t_i.
    """
    if r < 1:
        raise ValueError("join needs r >= 1")
    parts = _check_parts(parts)
    n = r + sum(parts)
    total = r * (r - 1) // 2 * weight_of_sum(2 * n - 2)
    for t in parts:
        total += r * t * weight_of_sum(2 * n - 1 - t)
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            total += parts[i] * parts[j] * weight_of_sum(2 * n - parts[i] - parts[j])
    return total


# ==================================================================
# clique with pendant trees: the cut-vertex extremal family
# ==================================================================

def build_knp(n: int, p: int) -> Graph:
    """The extremal graph with n vertices and exactly p cut vertices.

    For n >= 2p: a clique on n - p vertices with p pendant vertices
    attached to p distinct clique vertices.  For n < 2p: a clique on
    n - p vertices, a pendant on all but one clique vertex, and a path
    of length 2p - n + 1 hung on the remaining clique vertex.
    """
    if n < 3:
        raise ValueError("family needs n >= 3")
    if not 0 <= p <= n - 2:
        raise ValueError(f"cut vertex count must satisfy 0 <= p <= n - 2, got p={p}")
    q = n - p
    edges = [(u, v) for u in range(q) for v in range(u + 1, q)]
    if p == 0:
        return from_edges(n, edges)
    if n >= 2 * p:
        edges.extend((i, q + i) for i in range(p))
    else:
        edges.extend((j, q + j - 1) for j in range(1, q))
        length = 2 * p - n + 1
        prev = 0
        for i in range(length):
            nxt = 2 * q - 1 + i
            edges.append((prev, nxt))
            prev = nxt
    return from_edges(n, edges)


def abs_knp_closed(n: int, p: int) -> float:
    """Degree-pair census of build_knp, evaluated without building the graph."""
    if n < 3:
        raise ValueError("family needs n >= 3")
    if not 0 <= p <= n - 2:
        raise ValueError(f"cut vertex count must satisfy 0 <= p <= n - 2, got p={p}")
    q = n - p
    pairs: dict[tuple[int, int], int] = {}

    def add(a, b, mult):
        if mult:
            key = (a, b) if a <= b else (b, a)
            pairs[key] = pairs.get(key, 0) + mult

    if p == 0:
        add(n - 1, n - 1, n * (n - 1) // 2)
    elif n >= 2 * p:
        # p clique vertices carry a pendant (degree q), q - p do not (degree q - 1)
        add(1, q, p)
        add(q, q, p * (p - 1) // 2)
        add(q, q - 1, p * (q - p))
        add(q - 1, q - 1, (q - p) * (q - p - 1) // 2)
    else:
        # all clique vertices have degree q; the path has length 2p - n + 1 >= 2
        length = 2 * p - n + 1
        add(q, q, q * (q - 1) // 2)
        add(1, q, q - 1)
        add(q, 2, 1)
        add(2, 2, length - 2)
        add(2, 1, 1)
    return abs_from_degree_pairs(pairs)


# ==================================================================
# six-group bipartite blow-ups
# ==================================================================

@dataclass(frozen=True, slots=True)
class SixPart:
    """Sizes of the six independent groups of the bipartite blow-up.

    Groups 1-3 form one side, groups 4-6 the other.  Group 2 is joined
    to all of 4, 5, 6; group 5 to all of 1, 2, 3; additionally 1-4 and
    3-6 are joined.  So group 2 and group 5 together form a vertex cut
    whenever both ends survive.
    """

    n1: int
    n2: int
    n3: int
    n4: int
    n5: int
    n6: int

    def __post_init__(self):
        if any(t < 0 for t in self.sizes):
            raise ValueError("group sizes must be >= 0")

    @property
    def sizes(self) -> tuple[int, int, int, int, int, int]:
        return (self.n1, self.n2, self.n3, self.n4, self.n5, self.n6)

    @property
    def total(self) -> int:
        return sum(self.sizes)

    @property
    def cut_size(self) -> int:
        return self.n2 + self.n5


def sixpart_shape(parts) -> str:
    """Classify a size tuple into one of the recognized shapes, or raise.

    Recognized: "general" (all four corner groups nonempty, middles
    dominated by their corners), "mid-left-empty" (groups 1 and 5
    empty), "mid-right-empty" (groups 2 and 4 empty), and "kappa-xy"
    (groups 2 and 6 empty with a singleton group 3).
    """
    n1, n2, n3, n4, n5, n6 = SixPart(*parts).sizes
    if (min(n1, n3, n4, n6) >= 1 and n1 >= n5 and n3 >= n5
            and n4 >= n2 and n6 >= n2 and n2 + n5 >= 1):
        return "general"
    if n1 == 0 and n5 == 0 and min(n3, n4) >= 1 and 1 <= n2 <= n6:
        return "mid-left-empty"
    if n2 == 0 and n4 == 0 and min(n1, n6) >= 1 and 1 <= n5 <= n3:
        return "mid-right-empty"
    if n2 == 0 and n6 == 0 and n3 == 1 and min(n1, n4, n5) >= 1:
        return "kappa-xy"
    raise ValueError(f"sizes {tuple(parts)} fit no recognized shape")


_SIXPART_JOINS = ((0, 3), (0, 4), (1, 3), (1, 4), (1, 5), (2, 4), (2, 5))


def build_sixpart(parts, check: bool = True) -> Graph:
    """Build the six-group bipartite blow-up; validates shape unless check=False."""
    sp = SixPart(*parts)
    if check:
        sixpart_shape(sp.sizes)
    sizes = sp.sizes
    if sp.total < 1:
        raise ValueError("graph needs at least one vertex")
    offsets = [0]
    for t in sizes:
        offsets.append(offsets[-1] + t)
    edges = []
    for i, j in _SIXPART_JOINS:
        edges.extend((u, v)
                     for u in range(offsets[i], offsets[i + 1])
                     for v in range(offsets[j], offsets[j + 1]))
    return from_edges(sp.total, edges)


def abs_sixpart_closed(parts) -> float:
    """Closed ABS value of the six-group blow-up from its group sizes."""
    n1, n2, n3, n4, n5, n6 = SixPart(*parts).sizes
    n = n1 + n2 + n3 + n4 + n5 + n6
    total = 0.0
    for mult, s in ((n1 * n4, n - n3 - n6),
                    (n1 * n5, n - n6),
                    (n2 * n4, n - n3),
                    (n2 * n5, n),
                    (n2 * n6, n - n1),
                    (n3 * n5, n - n4),
                    (n3 * n6, n - n1 - n4)):
        if mult:
            total += mult * weight_of_sum(s)
    return total


def build_kappa_xy(x: int, y: int, kappa: int) -> Graph:
    """The blow-up with sizes (x, 0, 1, y, kappa, 0).

    Connected for x, y, kappa >= 1; the kappa middle vertices are the
    only neighbors of the singleton group, so they form a vertex cut.
    """
    if min(x, y, kappa) < 1:
        raise ValueError("x, y, kappa must all be >= 1")
    return build_sixpart((x, 0, 1, y, kappa, 0))


def abs_kappa_xy_closed(x: int, y: int, kappa: int) -> float:
    if min(x, y, kappa) < 1:
        raise ValueError("x, y, kappa must all be >= 1")
    n = x + y + kappa + 1
    return (x * y * weight_of_sum(n - 1)
            + x * kappa * weight_of_sum(n)
            + kappa * weight_of_sum(n - y))
