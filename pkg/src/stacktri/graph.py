"""Simple undirected graphs on vertex set {0, ..., n-1}.

Edges are stored as a frozenset of (u, v) pairs with u < v.  Instances are
immutable; edit operations return new graphs.  Adjacency views are cached
lazily per instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import InvalidGraph

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    """Return the canonical (min, max) form of an edge."""
    if u == v:
        raise InvalidGraph(f"self-loop at {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge]

    @staticmethod
    def build(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Validate and normalize raw edge pairs into a Graph."""
        if n < 0:
            raise InvalidGraph(f"negative vertex count {n}")
        out: set[Edge] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidGraph(f"edge ({u}, {v}) out of range for n={n}")
            out.add(norm_edge(u, v))
        return Graph(n, frozenset(out))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbor tuples, indexed by vertex."""
        sets: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            sets[u].append(v)
            sets[v].append(u)
        return tuple(tuple(sorted(s)) for s in sets)

    @cached_property
    def adj_masks(self) -> tuple[int, ...]:
        """Neighborhoods as bitmasks (bit v set iff v adjacent)."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edges

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> Graph:
        return Graph.build(self.n, list(self.edges) + list(extra))

    def without_edges(self, drop: Iterable[tuple[int, int]]) -> Graph:
        gone = {norm_edge(u, v) for u, v in drop}
        missing = gone - self.edges
        if missing:
            raise InvalidGraph(f"cannot drop absent edges {sorted(missing)}")
        return Graph(self.n, self.edges - gone)

    def induced(self, keep: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
        """Induced subgraph on `keep`, densely relabeled.

        Returns (subgraph, vmap) where vmap[new_id] = old_id; kept vertices
        are relabeled in increasing old-id order.
        """
        vmap = tuple(sorted(set(keep)))
        if vmap and not (0 <= vmap[0] and vmap[-1] < self.n):
            raise InvalidGraph("induced(): vertex out of range")
        back = {old: new for new, old in enumerate(vmap)}
        # back is monotone, so normalized pairs stay normalized
        sub = frozenset(
            (back[u], back[v])
            for u, v in self.edges
            if u in back and v in back
        )
        return Graph(len(vmap), sub), vmap

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by minimum."""
        seen = [False] * self.n
        out: list[list[int]] = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            stack = [s]
            while stack:
                u = stack.pop()
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack.append(w)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        masks = self.adj_masks
        seen = 1
        frontier = 1
        while frontier:
            nb = 0
            m = frontier
            while m:
                b = m & -m
                m ^= b
                nb |= masks[b.bit_length() - 1]
            frontier = nb & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1

    def articulation_vertices(self) -> list[int]:
        """Cut vertices, sorted ascending.  Iterative lowpoint DFS."""
        n = self.n
        disc = [-1] * n
        low = [0] * n
        parent = [-1] * n
        cut = [False] * n
        timer = 0
        for root in range(n):
            if disc[root] != -1:
                continue
            root_children = 0
            stack: list[tuple[int, int]] = [(root, 0)]
            disc[root] = low[root] = timer
            timer += 1
            while stack:
                u, i = stack.pop()
                if i < len(self.adj[u]):
                    stack.append((u, i + 1))
                    w = self.adj[u][i]
                    if disc[w] == -1:
                        parent[w] = u
                        if u == root:
                            root_children += 1
                        disc[w] = low[w] = timer
                        timer += 1
                        stack.append((w, 0))
                    elif w != parent[u]:
                        low[u] = min(low[u], disc[w])
                else:
                    p = parent[u]
                    if p != -1:
                        low[p] = min(low[p], low[u])
                        if p != root and low[u] >= disc[p]:
                            cut[p] = True
            if root_children >= 2:
                cut[root] = True
        return [v for v in range(n) if cut[v]]
