"""Isomorph-free enumeration of small connected graphs.

Generation is by canonical augmentation: every graph on k + 1 vertices
is reached by adding one vertex to a graph on k vertices, and a child
is accepted only when the parent it came from is the child's canonical
parent (the graph left after deleting the canonically chosen non-cut
vertex).  Each isomorphism class is therefore produced exactly once,
with no global seen-set.

Bipartite mode keeps every intermediate graph connected and bipartite
by only attaching the new vertex inside one side of the parent's
bipartition; no post-filtering is involved.
"""

from dataclasses import dataclass
from typing import Iterator

from .graph import Graph, _bits
from .canon import CanonicalForm, _canon
from .invariants import (ClassConstraint, _blocks_and_cut_vertices, bipartition,
                         satisfies)

MAX_ENUM_VERTICES = 9


@dataclass(frozen=True, slots=True)
class EnumSpec:
    """What to enumerate: order, graph class, optional membership filter."""

    n: int
    bipartite: bool = False
    constraint: ClassConstraint | None = None

    def __post_init__(self):
        if not 1 <= self.n <= MAX_ENUM_VERTICES:
            raise ValueError(
                f"enumeration supports 1 <= n <= {MAX_ENUM_VERTICES}, got n={self.n}")


_LEVELS: dict[tuple[int, bool], tuple[tuple[Graph, int], ...]] = {}


def _nonempty_submasks(mask: int) -> Iterator[int]:
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


def _attachment_masks(parent: Graph, bipartite: bool) -> Iterator[int]:
    if not bipartite:
        yield from range(1, 1 << parent.n)
        return
    side0, side1 = bipartition(parent)
    yield from _nonempty_submasks(sum(1 << v for v in side0))
    yield from _nonempty_submasks(sum(1 << v for v in side1))


def _level(n: int, bipartite: bool) -> tuple[tuple[Graph, int], ...]:
    key = (n, bipartite)
    if key in _LEVELS:
        return _LEVELS[key]
    if n == 1:
        out: tuple[tuple[Graph, int], ...] = ((Graph(1, (0,)), 0),)
        _LEVELS[key] = out
        return out
    accepted = []
    new = n - 1  # index of the added vertex in each child
    for parent, parent_key in _level(n - 1, bipartite):
        seen: set[int] = set()
        for mask in _attachment_masks(parent, bipartite):
            adj = list(parent.adj)
            for v in _bits(mask):
                adj[v] |= 1 << new
            adj.append(mask)
            child = Graph(n, tuple(adj))
            child_key, order = _canon(child)
            if child_key in seen:
                continue
            seen.add(child_key)
            canon_child = CanonicalForm(n, child_key).to_graph()
            cuts = _blocks_and_cut_vertices(canon_child)[1]
            target = max(v for v in range(n) if v not in cuts)
            if order.index(new) == target:
                ok = True
            else:
                remain = [order[pos] for pos in range(n) if pos != target]
                sub_adj = []
                for v in remain:
                    row = 0
                    for i, u in enumerate(remain):
                        if child.adj[v] >> u & 1:
                            row |= 1 << i
                    sub_adj.append(row)
                ok = _canon(Graph(n - 1, tuple(sub_adj)))[0] == parent_key
            if ok:
                accepted.append((canon_child, child_key))
    accepted.sort(key=lambda item: item[1])
    out = tuple(accepted)
    _LEVELS[key] = out
    return out


def enumerate_graphs(spec: EnumSpec) -> Iterator[Graph]:
    """Yield one canonical representative per isomorphism class.

    Output order is deterministic for a fixed spec (ascending canonical
    form).  Filtered runs yield exactly the unfiltered stream restricted
    to graphs satisfying the constraint.
    """
    for g, _ in _level(spec.n, spec.bipartite):
        if spec.constraint is None or satisfies(g, spec.constraint):
            yield g


def count_graphs(spec: EnumSpec) -> int:
    return sum(1 for _ in enumerate_graphs(spec))


def connected_graphs(n: int, bipartite: bool = False) -> tuple[Graph, ...]:
    """All connected (optionally bipartite) graphs of order n, one per class."""
    EnumSpec(n, bipartite)  # envelope check
    return tuple(g for g, _ in _level(n, bipartite))
