"""Structural graph invariants: connectivity, cut vertices, blocks,
bipartiteness, vertex k-partiteness, and the class constraints built
from them.

Vertex connectivity and k-partiteness are exact brute-force searches;
they are meant for the small orders the rest of the package works at
(connectivity to about n = 12, k-partiteness to about n = 14).
"""

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, _bits


def _connected_within(adj: tuple[int, ...], mask: int) -> bool:
    """True if the vertices selected by mask induce a connected subgraph."""
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        frontier = nxt & mask & ~seen
        seen |= frontier
    return seen == mask


def is_connected(g: Graph) -> bool:
    return _connected_within(g.adj, (1 << g.n) - 1)


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise ValueError("graph must be connected")


def _blocks_and_cut_vertices(g: Graph) -> tuple[list[frozenset[int]], frozenset[int]]:
    """Hopcroft-Tarjan DFS with an edge stack; one pass yields both."""
    n = g.n
    disc = [0] * n
    low = [0] * n
    children = [0] * n
    timer = 1
    cuts: set[int] = set()
    blocks: list[frozenset[int]] = []
    for root in range(n):
        if disc[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        estack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(tuple(g.neighbors(root))))]
        while stack:
            v, parent, it = stack[-1]
            pushed = False
            for w in it:
                if w == parent:
                    continue
                if disc[w] == 0:
                    children[v] += 1
                    estack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(tuple(g.neighbors(w)))))
                    pushed = True
                    break
                if disc[w] < disc[v]:
                    estack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if pushed:
                continue
            stack.pop()
            if not stack:
                continue
            pv = stack[-1][0]
            if low[v] < low[pv]:
                low[pv] = low[v]
            if low[v] >= disc[pv]:
                block: set[int] = set()
                while True:
                    e = estack.pop()
                    block.update(e)
                    if e == (pv, v):
                        break
                blocks.append(frozenset(block))
                if stack[-1][1] != -1 or children[pv] >= 2:
                    cuts.add(pv)
    return blocks, frozenset(cuts)


def cut_vertices(g: Graph) -> frozenset[int]:
    """Articulation points of a connected graph."""
    _require_connected(g)
    return _blocks_and_cut_vertices(g)[1]


def cut_vertex_count(g: Graph) -> int:
    return len(cut_vertices(g))


def block_decomposition(g: Graph) -> list[frozenset[int]]:
    """Blocks (maximal 2-connected subgraphs and bridges) of a connected graph.

    Every edge lies in exactly one block; cut vertices are exactly the
    vertices appearing in more than one block.  K_1 has no blocks.
    """
    _require_connected(g)
    blocks = _blocks_and_cut_vertices(g)[0]
    return sorted(blocks, key=lambda b: (min(b), len(b), sorted(b)))


def vertex_connectivity(g: Graph) -> int:
    """Minimum size of a disconnecting vertex set; n - 1 for complete graphs.

    Exhaustive over separator candidates in increasing size, so exact at
    the small orders this package targets.
    """
    if g.n < 2:
        raise ValueError("vertex connectivity needs at least 2 vertices")
    _require_connected(g)
    full = (1 << g.n) - 1
    if all(row == full ^ (1 << v) for v, row in enumerate(g.adj)):
        return g.n - 1
    for size in range(1, g.n - 1):
        for combo in combinations(range(g.n), size):
            mask = full
            for v in combo:
                mask ^= 1 << v
            if not _connected_within(g.adj, mask):
                return size
    return g.n - 1


def bipartition(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """A proper 2-coloring as two vertex tuples, or None.

    The lowest vertex of each component goes in the first side, so for a
    connected graph the result is the unique bipartition with vertex 0
    first.
    """
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for w in g.neighbors(v):
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    side0 = tuple(v for v in range(g.n) if color[v] == 0)
    side1 = tuple(v for v in range(g.n) if color[v] == 1)
    return side0, side1


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def _bipartite_within(adj: tuple[int, ...], mask: int) -> bool:
    color: dict[int, int] = {}
    for start in _bits(mask):
        if start in color:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for w in _bits(adj[v] & mask):
                if w not in color:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def _k_colorable(adj: tuple[int, ...], mask: int, k: int) -> bool:
    verts = list(_bits(mask))
    if len(verts) <= k:
        return True
    if k == 2:
        return _bipartite_within(adj, mask)
    verts.sort(key=lambda v: -(adj[v] & mask).bit_count())
    cmasks = [0] * k

    def assign(i: int, used: int) -> bool:
        if i == len(verts):
            return True
        v = verts[i]
        row = adj[v]
        # trying at most one fresh color kills color-permutation symmetry
        for c in range(min(k, used + 1)):
            if row & cmasks[c]:
                continue
            cmasks[c] |= 1 << v
            if assign(i + 1, used + (1 if c == used else 0)):
                return True
            cmasks[c] ^= 1 << v
        return False

    return assign(0, 0)


def vertex_k_partiteness(g: Graph, k: int) -> int:
    """Minimum number of vertex deletions leaving a k-colorable graph.

    Exact: iterative deepening over deletion-set size with a
    backtracking k-colorability test.  Always at most n - k.
    """
    if k < 2:
        raise ValueError("k-partiteness needs k >= 2")
    full = (1 << g.n) - 1
    if _k_colorable(g.adj, full, k):
        return 0
    for size in range(1, g.n - k + 1):
        for combo in combinations(range(g.n), size):
            mask = full
            for v in combo:
                mask ^= 1 << v
            if _k_colorable(g.adj, mask, k):
                return size
    raise AssertionError("unreachable: deleting n - k vertices always suffices")


# ==================================================================
# class constraints
# ==================================================================

@dataclass(frozen=True, slots=True)
class CutVertices:
    """Connected graphs with exactly p cut vertices."""

    p: int

    def __post_init__(self):
        if self.p < 0:
            raise ValueError("cut vertex count must be >= 0")

    def to_dict(self) -> dict:
        return {"kind": "cut-vertices", "p": self.p}


@dataclass(frozen=True, slots=True)
class KPartiteness:
    """Connected graphs with vertex k-partiteness exactly r."""

    k: int
    r: int

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("k must be >= 2")
        if self.r < 0:
            raise ValueError("r must be >= 0")

    def to_dict(self) -> dict:
        return {"kind": "k-partiteness", "k": self.k, "r": self.r}


@dataclass(frozen=True, slots=True)
class BipartiteConnectivity:
    """Connected bipartite graphs with vertex connectivity exactly kappa."""

    kappa: int

    def __post_init__(self):
        if self.kappa < 1:
            raise ValueError("kappa must be >= 1")

    def to_dict(self) -> dict:
        return {"kind": "bipartite-kappa", "kappa": self.kappa}


ClassConstraint = CutVertices | KPartiteness | BipartiteConnectivity


def satisfies(g: Graph, constraint: ClassConstraint) -> bool:
    """Membership test; every constraint class contains connected graphs only."""
    if not is_connected(g):
        return False
    if isinstance(constraint, CutVertices):
        return cut_vertex_count(g) == constraint.p
    if isinstance(constraint, KPartiteness):
        return vertex_k_partiteness(g, constraint.k) == constraint.r
    if isinstance(constraint, BipartiteConnectivity):
        if not is_bipartite(g):
            return False
        vc = 0 if g.n == 1 else vertex_connectivity(g)
        return vc == constraint.kappa
    raise TypeError(f"unknown constraint {constraint!r}")
