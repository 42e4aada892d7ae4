"""Simple undirected graphs on up to 64 vertices, stored as bitmask rows.

Vertices are dense 0-based integers.  A graph is an immutable value: the
vertex count plus one adjacency bitmask per vertex.  All construction
operators return new graphs.
"""

import re
from dataclasses import dataclass

MAX_VERTICES = 64


def _bits(mask: int):
    """Yield the set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, slots=True)
class Graph:
    """Immutable simple graph.  adj[v] has bit u set iff uv is an edge."""

    n: int
    adj: tuple[int, ...]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self):
        """Yield edges as (u, v) pairs with u < v, in lexicographic order."""
        for u in range(self.n):
            high = self.adj[u] >> (u + 1)
            for off in _bits(high):
                yield u, u + 1 + off

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(row.bit_count() for row in self.adj) // 2

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(row.bit_count() for row in self.adj))

    def neighbors(self, v: int):
        return _bits(self.adj[v])


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")


def empty_graph(n: int) -> Graph:
    _check_n(n)
    return Graph(n, (0,) * n)


def from_edges(n: int, edges) -> Graph:
    _check_n(n)
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"loop at vertex {u} not allowed")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    """Return g plus the edge uv (error if present or invalid)."""
    if not (0 <= u < g.n and 0 <= v < g.n) or u == v:
        raise ValueError(f"invalid edge ({u}, {v}) for n={g.n}")
    if g.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) already present")
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(g.n, tuple(adj))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full ^ row) & ~(1 << v) for v, row in enumerate(g.adj)))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    n = g1.n + g2.n
    _check_n(n)
    shifted = tuple(row << g1.n for row in g2.adj)
    return Graph(n, g1.adj + shifted)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus all edges between the two parts."""
    u = disjoint_union(g1, g2)
    left = (1 << g1.n) - 1
    right = ((1 << u.n) - 1) ^ left
    adj = [row | (right if v < g1.n else left) for v, row in enumerate(u.adj)]
    return Graph(u.n, tuple(adj))


def relabel(g: Graph, perm) -> Graph:
    """Apply the vertex permutation perm, where perm[old] = new."""
    perm = tuple(perm)
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm is not a permutation of the vertex set")
    adj = [0] * g.n
    for old, row in enumerate(g.adj):
        new_row = 0
        for old_nb in _bits(row):
            new_row |= 1 << perm[old_nb]
        adj[perm[old]] = new_row
    return Graph(g.n, tuple(adj))


def induced_subgraph(g: Graph, vertices) -> Graph:
    """Subgraph induced on the given vertices, relabeled to 0..k-1 in sorted order."""
    keep = sorted(set(vertices))
    if not keep:
        raise ValueError("induced subgraph needs at least one vertex")
    pos = {v: i for i, v in enumerate(keep)}
    adj = [0] * len(keep)
    for v in keep:
        for nb in _bits(g.adj[v]):
            if nb in pos:
                adj[pos[v]] |= 1 << pos[nb]
    return Graph(len(keep), tuple(adj))


def delete_vertex(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    if g.n == 1:
        raise ValueError("cannot delete the only vertex")
    return induced_subgraph(g, (u for u in range(g.n) if u != v))


# ==================================================================
# graph6 encoding
# ==================================================================

def _g6_size_bytes(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    # 63 <= n <= 258047: '~' followed by three 6-bit groups, big-endian
    return bytes([126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])


def to_graph6(g: Graph) -> str:
    """Encode in standard graph6 format (upper triangle, column-major bits)."""
    bits = []
    for v in range(1, g.n):
        col = g.adj[v]
        bits.extend((col >> u) & 1 for u in range(v))
    while len(bits) % 6:
        bits.append(0)
    out = bytearray(_g6_size_bytes(g.n))
    for i in range(0, len(bits), 6):
        word = 0
        for b in bits[i:i + 6]:
            word = word << 1 | b
        out.append(word + 63)
    return out.decode("ascii")


def from_graph6(text: str) -> Graph:
    """Decode a graph6 line (an optional >>graph6<< header is accepted)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ValueError("empty graph6 string")
    data = [ord(ch) - 63 for ch in s]
    if any(b < 0 or b > 63 for b in data):
        raise ValueError(f"invalid graph6 character in {text!r}")
    if data[0] <= 62:
        n, body = data[0], data[1:]
    else:
        if len(data) < 4:
            raise ValueError("truncated graph6 size field")
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    if n == 0 or n > MAX_VERTICES:
        raise ValueError(f"graph6 vertex count {n} outside supported range 1..{MAX_VERTICES}")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ValueError(f"graph6 body length {len(body)} != expected {need} for n={n}")
    bits = []
    for word in body:
        bits.extend((word >> shift) & 1 for shift in range(5, -1, -1))
    adj = [0] * n
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            idx += 1
    return Graph(n, tuple(adj))


# ==================================================================
# edge-list text format: first line n, then one "u v" line per edge
# ==================================================================

def to_edge_list_text(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_edge_list_text(text: str) -> Graph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty edge-list input")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"first line must be the vertex count, got {lines[0]!r}") from None
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"expected 'u v' edge line, got {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return from_edges(n, edges)


def parse_graph(text: str, fmt: str = "auto") -> Graph:
    """Parse a single graph from text in graph6 or edge-list format."""
    if fmt not in ("auto", "graph6", "edges"):
        raise ValueError(f"unknown format {fmt!r}")
    if fmt == "auto":
        first = next((ln for ln in text.splitlines() if ln.strip()), "")
        fmt = "edges" if re.fullmatch(r"\d+", first.strip()) else "graph6"
    if fmt == "graph6":
        return from_graph6(text)
    return from_edge_list_text(text)
