"""Canonical labeling and isomorphism testing for small graphs.

The canonical form of a graph is the lexicographically smallest
upper-triangle adjacency encoding over a set of candidate labelings.
Candidates are produced by equitable partition refinement (iterated
splitting by neighbor counts) followed by backtracking
individualization of the first non-singleton cell.  Correctness over
speed: every branch consistent with the refined partition is explored,
so two graphs receive equal forms exactly when they are isomorphic.
Intended envelope is n <= 12; larger inputs are attempted best-effort.
"""

from dataclasses import dataclass
from functools import lru_cache

from .graph import Graph, relabel, to_graph6


@dataclass(frozen=True, slots=True)
class CanonicalForm:
    """Vertex count plus upper-triangle adjacency bits of the canonical copy.

    Bits are ordered as in graph6 (column-major: pair (u, v) with u < v
    appears before (u', v') iff v < v' or v = v' and u < u'), most
    significant bit first.  Equality of forms is graph isomorphism.
    """

    n: int
    bits: int

    @property
    def bitstring(self) -> str:
        width = self.n * (self.n - 1) // 2
        return format(self.bits, f"0{width}b") if width else ""

    def to_graph(self) -> Graph:
        adj = [0] * self.n
        shift = self.n * (self.n - 1) // 2
        for v in range(1, self.n):
            for u in range(v):
                shift -= 1
                if self.bits >> shift & 1:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Refine an ordered partition until equitable.

    Cells split by neighbor count into a splitter cell; fragments are
    ordered by count, so the refined partition depends only on the
    input partition order and the abstract graph, never on labels.
    """
    cells = [list(c) for c in cells]
    while True:
        changed = False
        for splitter in [sum(1 << v for v in c) for c in cells]:
            out: list[list[int]] = []
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((adj[v] & splitter).bit_count(), []).append(v)
                if len(groups) == 1:
                    out.append(cell)
                else:
                    changed = True
                    for count in sorted(groups):
                        out.append(groups[count])
            cells = out
            if changed:
                break
        if not changed:
            return cells


def _key_of(adj: tuple[int, ...], order: list[int]) -> int:
    key = 0
    for v in range(1, len(order)):
        col = adj[order[v]]
        for u in range(v):
            key = key << 1 | (col >> order[u] & 1)
    return key


def _search(adj: tuple[int, ...], cells: list[list[int]], best: list) -> None:
    cells = _refine(adj, cells)
    target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
    if target is None:
        order = [c[0] for c in cells]
        key = _key_of(adj, order)
        if best[0] is None or key < best[0]:
            best[0] = key
            best[1] = order
        return
    cell = cells[target]
    for v in cell:
        rest = [u for u in cell if u != v]
        _search(adj, cells[:target] + [[v], rest] + cells[target + 1:], best)


@lru_cache(maxsize=8192)
def _canon(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Return (key, order) where order[i] is the vertex at canonical position i."""
    n = g.n
    if n == 1:
        return 0, (0,)
    deg_sum = sum(row.bit_count() for row in g.adj)
    if deg_sum in (0, n * (n - 1)):
        # empty and complete graphs: every labeling is canonical
        return _key_of(g.adj, list(range(n))), tuple(range(n))
    best: list = [None, None]
    _search(g.adj, [list(range(n))], best)
    return best[0], tuple(best[1])


def canonical_form(g: Graph) -> CanonicalForm:
    key, _ = _canon(g)
    return CanonicalForm(g.n, key)


def canonical_labeling(g: Graph) -> tuple[int, ...]:
    """Permutation mapping each vertex to its canonical position (old -> new)."""
    _, order = _canon(g)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return tuple(perm)


def canonical_graph(g: Graph) -> Graph:
    """The canonically labeled copy of g (a fixed point of itself)."""
    return relabel(g, canonical_labeling(g))


def canonical_graph6(g: Graph) -> str:
    """graph6 string of the canonical copy; equal strings mean isomorphic."""
    return to_graph6(canonical_graph(g))


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.degree_sequence() != g2.degree_sequence():
        return False
    return _canon(g1)[0] == _canon(g2)[0]
