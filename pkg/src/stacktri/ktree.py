"""Elimination schemes for 3-trees and recognition of stacked drawings.

A perfect elimination scheme (Pes) lists the vertices in construction
order: a base clique first, then each vertex whose earlier neighbors
form a clique.  In strict form the base is exactly a triangle and every
later vertex sees exactly three earlier neighbors, which characterizes
3-trees.
"""

from __future__ import annotations

from dataclasses import dataclass
from heapq import heapify, heappop, heappush

from .errors import NotAThreeTree, NotATriangle, NotPermutation
from .graph import Graph
from .plane import PlaneGraph

# counts vertices a stacking step attaches to
K = 3


@dataclass(frozen=True)
class Pes:
    """Vertex order witnessing 3-tree structure (base clique first)."""

    order: tuple[int, ...]

    @property
    def base(self) -> tuple[int, ...]:
        return self.order[:K]


@dataclass(frozen=True)
class Unstackable:
    """Verdict for drawings that are not stacked plane 3-trees."""

    reason: str


def verify_pes(g: Graph, pes: Pes, *, strict: bool = True) -> bool:
    """Check an elimination scheme against a graph.

    Raises NotPermutation for malformed input; returns False when the
    order is a permutation but not a valid scheme.  Strict mode demands
    a triangle base and back-degree exactly 3 afterwards.
    """
    order = pes.order
    if sorted(order) != list(range(g.n)):
        raise NotPermutation(f"order is not a permutation of 0..{g.n - 1}")
    pos = {v: i for i, v in enumerate(order)}
    for i, v in enumerate(order):
        back = [w for w in g.adj[v] if pos[w] < i]
        if strict:
            if i < K and len(back) != i:
                return False
            if i >= K and len(back) != K:
                return False
        for a in range(len(back)):
            for b in range(a + 1, len(back)):
                if not g.has_edge(back[a], back[b]):
                    return False
    return True


def _greedy_peel(g: Graph, protected: frozenset[int]) -> list[int] | None:
    """Remove degree-3 simplicial vertices outside ``protected``, smallest
    id first, until only 3 vertices remain.  Returns the removal sequence
    or None when stuck (the graph is not a 3-tree on this base)."""
    n = g.n
    adjm = list(g.adj_masks)
    alive = n
    removed: list[int] = []
    heap = [
        v for v in range(n) if v not in protected and adjm[v].bit_count() == 3
    ]
    heapify(heap)
    gone = [False] * n
    while alive > 3 and heap:
        v = heappop(heap)
        m = adjm[v]
        if gone[v] or m.bit_count() != 3:
            continue
        a = (m & -m).bit_length() - 1
        m2 = m & (m - 1)
        b = (m2 & -m2).bit_length() - 1
        c = (m2 & (m2 - 1)).bit_length() - 1
        if not (adjm[a] >> b & 1 and adjm[a] >> c & 1 and adjm[b] >> c & 1):
            continue  # re-enters the heap if a neighbor's degree changes
        gone[v] = True
        removed.append(v)
        alive -= 1
        bit = 1 << v
        for w in (a, b, c):
            adjm[w] &= ~bit
            if w not in protected and adjm[w].bit_count() == 3:
                heappush(heap, w)
        adjm[v] = 0
    if alive > 3:
        return None
    return removed


def reroot_pes(g: Graph, base: tuple[int, int, int]) -> Pes:
    """A strict elimination scheme of the 3-tree ``g`` beginning with
    ``base`` in the given order.

    Raises NotATriangle if the base does not induce a triangle and
    NotAThreeTree if ``g`` is not a 3-tree.
    """
    t = tuple(base)
    if len(set(t)) != 3 or not all(0 <= v < g.n for v in t):
        raise NotATriangle(f"base {t} is not three distinct vertices")
    if not (g.has_edge(t[0], t[1]) and g.has_edge(t[1], t[2]) and g.has_edge(t[0], t[2])):
        raise NotATriangle(f"base {t} does not induce a triangle")
    if g.n == 3:
        if g.m != 3:
            raise NotAThreeTree("three vertices with extra structure")
        return Pes(t)
    if g.m != 3 * g.n - 6:
        raise NotAThreeTree(f"edge count {g.m} differs from 3n-6")
    removed = _greedy_peel(g, frozenset(t))
    if removed is None:
        raise NotAThreeTree("peeling got stuck before reaching the base")
    return Pes(t + tuple(reversed(removed)))


def is_stacked_plane_3tree(p: PlaneGraph) -> Pes | Unstackable:
    """Decide whether a drawing is a stacked plane 3-tree.

    Accepts iff the graph is a connected 3-tree and every face of the
    drawing, the outer one included, is a triangle.  On success returns
    an elimination scheme compatible with unstacking the drawing.
    """
    g = p.graph
    n = g.n
    if n < 3:
        return Unstackable("fewer than three vertices")
    if not g.is_connected():
        return Unstackable("not connected")
    if g.m != 3 * n - 6:
        return Unstackable(f"{g.m} edges where a triangulation needs {3 * n - 6}")
    # connected, so no vertex is hosted; a fused class would mean a face
    # bounded by more than one walk, and a length-3 walk cannot repeat a
    # vertex, so the remaining test is just walk lengths
    if p.fused:
        return Unstackable(f"face {min(min(c) for c in p.fused)} is not a triangle")
    for w in p.walks:
        if len(w) != 3:
            return Unstackable(f"face {w[0]} is not a triangle")
    if n == 3:
        return Pes((0, 1, 2))
    removed = _greedy_peel(g, frozenset())
    if removed is None:
        return Unstackable("not a 3-tree")
    rest = sorted(set(range(n)) - set(removed))
    return Pes(tuple(rest) + tuple(reversed(removed)))
