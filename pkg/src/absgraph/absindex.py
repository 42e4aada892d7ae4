"""The atom-bond sum connectivity index.

For a graph G the index is the sum over edges uv of
sqrt(1 - 2 / (d(u) + d(v))).  An edge between two degree-1 vertices
contributes 0, so ABS(K_2) = 0.  Sums are accumulated with math.fsum,
which is order-independent, so relabeling a graph cannot change the
result in even the last bit.
"""

import math
from collections.abc import Mapping

from .graph import Graph

_TWO = 2.0


def weight_of_sum(s: float) -> float:
    """sqrt(1 - 2/s) for a degree sum s >= 2."""
    if s < 2:
        raise ValueError(f"degree sum must be >= 2, got {s}")
    return math.sqrt(1.0 - _TWO / s)


def edge_weight(a: int, b: int) -> float:
    """Weight contributed by an edge with endpoint degrees a and b."""
    if a < 1 or b < 1:
        raise ValueError(f"endpoint degrees must be >= 1, got ({a}, {b})")
    return weight_of_sum(a + b)


def degree_pairs(g: Graph) -> tuple[tuple[int, int], ...]:
    """Sorted multiset of (low degree, high degree) pairs, one per edge."""
    deg = [row.bit_count() for row in g.adj]
    pairs = []
    for u, v in g.edges():
        a, b = deg[u], deg[v]
        pairs.append((a, b) if a <= b else (b, a))
    return tuple(sorted(pairs))


def abs_index(g: Graph) -> float:
    deg = [row.bit_count() for row in g.adj]
    return math.fsum(edge_weight(deg[u], deg[v]) for u, v in g.edges())


def abs_from_degree_pairs(pairs) -> float:
    """ABS value of a degree-pair multiset.

    Accepts an iterable of (a, b) pairs or a mapping {(a, b): multiplicity}.
    """
    if isinstance(pairs, Mapping):
        items = [(a, b, mult) for (a, b), mult in pairs.items()]
    else:
        items = [(a, b, 1) for a, b in pairs]
    for a, b, mult in items:
        if mult < 0:
            raise ValueError("multiplicities must be >= 0")
    return math.fsum(mult * edge_weight(a, b) for a, b, mult in items if mult)
