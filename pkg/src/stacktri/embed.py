"""Plane embedding of abstract planar graphs.

Each 2-connected block is embedded by incremental face splitting: start
from a cycle, then repeatedly route a path of some unembedded fragment
through a face whose boundary contains all of the fragment's attachment
vertices, preferring fragments that have only one admissible face.  A
fragment with no admissible face certifies nonplanarity.

Blocks are glued at cut vertices by concatenating their rotation cycles;
components are drawn side by side, their outer walks fused into a single
outer face.  The result is validated before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NonplanarError
from .graph import Edge, Graph, norm_edge
from .plane import PlaneGraph


# ---------------------------------------------------------------------------
# biconnected blocks


def biconnected_blocks(g: Graph) -> list[list[Edge]]:
    """Edge sets of the biconnected blocks (bridges are single edges)."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    estack: list[Edge] = []
    blocks: list[list[Edge]] = []
    timer = 0
    for root in range(n):
        if disc[root] != -1 or g.degree(root) == 0:
            continue
        stack: list[tuple[int, int]] = [(root, 0)]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            u, i = stack.pop()
            if i < len(g.adj[u]):
                stack.append((u, i + 1))
                w = g.adj[u][i]
                if disc[w] == -1:
                    parent[w] = u
                    estack.append(norm_edge(u, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, 0))
                elif w != parent[u] and disc[w] < disc[u]:
                    estack.append(norm_edge(u, w))
                    low[u] = min(low[u], disc[w])
            else:
                p = parent[u]
                if p != -1:
                    low[p] = min(low[p], low[u])
                    if low[u] >= disc[p]:
                        block = []
                        e = norm_edge(p, u)
                        while True:
                            top = estack.pop()
                            block.append(top)
                            if top == e:
                                break
                        blocks.append(block)
    return blocks


# ---------------------------------------------------------------------------
# one 2-connected block


@dataclass
class _Fragment:
    attachments: tuple[int, ...]
    interior: tuple[int, ...]


def _find_cycle(adj: dict[int, list[int]], start: int) -> list[int]:
    """A cycle through ``start``'s block, as a vertex list.

    True depth-first order, so every non-tree edge reaches an ancestor
    and closes a cycle along parent links.
    """
    parent = {start: -1}
    stack: list[tuple[int, int]] = [(start, 0)]
    while stack:
        u, i = stack[-1]
        if i == len(adj[u]):
            stack.pop()
            continue
        stack[-1] = (u, i + 1)
        w = adj[u][i]
        if w not in parent:
            parent[w] = u
            stack.append((w, 0))
        elif w != parent[u]:
            path = [u]
            while path[-1] != w:
                path.append(parent[path[-1]])
            return path
    raise AssertionError("2-connected block without a cycle")


def _fragments(
    adj: dict[int, list[int]],
    verts: list[int],
    h_verts: set[int],
    h_edges: set[Edge],
    all_edges: list[Edge],
) -> list[_Fragment]:
    frs: list[_Fragment] = []
    for u, v in all_edges:
        if u in h_verts and v in h_verts and (u, v) not in h_edges:
            frs.append(_Fragment((u, v), ()))
    seen: set[int] = set()
    for s in verts:
        if s in h_verts or s in seen:
            continue
        comp = [s]
        seen.add(s)
        queue = [s]
        att: set[int] = set()
        while queue:
            u = queue.pop()
            for w in adj[u]:
                if w in h_verts:
                    att.add(w)
                elif w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        frs.append(_Fragment(tuple(sorted(att)), tuple(sorted(comp))))
    frs.sort(key=lambda f: (f.attachments, f.interior))
    return frs


def _path_through(
    frag: _Fragment, adj: dict[int, list[int]], h_verts: set[int]
) -> list[int]:
    """A path between two attachments through the fragment's interior."""
    if not frag.interior:
        return [frag.attachments[0], frag.attachments[1]]
    a1 = frag.attachments[0]
    interior = set(frag.interior)
    # BFS from a1 through interior vertices to any other attachment
    prev: dict[int, int] = {}
    queue = [w for w in sorted(adj[a1]) if w in interior]
    for w in queue:
        prev[w] = a1
    qi = 0
    while qi < len(queue):
        u = queue[qi]
        qi += 1
        for w in sorted(adj[u]):
            if w in h_verts and w != a1:
                path = [w, u]
                while path[-1] != a1:
                    path.append(prev[path[-1]])
                path.reverse()
                return path
            if w in interior and w not in prev:
                prev[w] = u
                queue.append(w)
    raise AssertionError("fragment with a single attachment in a 2-connected block")


def _split_face(faces: list[list[int]], fi: int, path: list[int]) -> None:
    f = faces[fi]
    a1, a2 = path[0], path[-1]
    i1, i2 = f.index(a1), f.index(a2)
    if i1 <= i2:
        arc_a = f[i1 : i2 + 1]
        arc_b = f[i2:] + f[: i1 + 1]
    else:
        arc_a = f[i1:] + f[: i2 + 1]
        arc_b = f[i2 : i1 + 1]
    inner = path[1:-1]
    faces[fi] = arc_a + inner[::-1]
    faces.append(arc_b + inner)


def _rotations_from_faces(
    faces: list[list[int]], verts: list[int]
) -> dict[int, tuple[int, ...]]:
    before: dict[int, dict[int, int]] = {v: {} for v in verts}
    for f in faces:
        k = len(f)
        for i in range(k):
            u, v, w = f[i - 2], f[i - 1], f[i]
            before[v][u] = w
    rot: dict[int, tuple[int, ...]] = {}
    for v in verts:
        m = before[v]
        start = min(m)
        seq = [start]
        while True:
            nxt = m[seq[-1]]
            if nxt == start:
                break
            seq.append(nxt)
        rot[v] = tuple(reversed(seq))
    return rot


def _embed_block(edges: list[Edge]) -> dict[int, tuple[int, ...]]:
    if len(edges) == 1:
        (u, v) = edges[0]
        return {u: (v,), v: (u,)}
    verts = sorted({x for e in edges for x in e})
    adj: dict[int, list[int]] = {v: [] for v in verts}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    for v in verts:
        adj[v].sort()

    cycle = _find_cycle(adj, verts[0])
    faces: list[list[int]] = [list(cycle), list(reversed(cycle))]
    h_verts = set(cycle)
    h_edges: set[Edge] = set()
    for i in range(len(cycle)):
        h_edges.add(norm_edge(cycle[i - 1], cycle[i]))
    all_edges = sorted(edges)
    total = len(all_edges)

    while len(h_edges) < total:
        frs = _fragments(adj, verts, h_verts, h_edges, all_edges)
        pick: tuple[_Fragment, int] | None = None
        for frag in frs:
            att = set(frag.attachments)
            adm = [i for i, f in enumerate(faces) if att <= set(f)]
            if not adm:
                raise NonplanarError(
                    f"fragment attached at {frag.attachments} fits no face"
                )
            if len(adm) == 1:
                pick = (frag, adm[0])
                break
            if pick is None:
                pick = (frag, adm[0])
        assert pick is not None
        frag, fi = pick
        path = _path_through(frag, adj, h_verts)
        _split_face(faces, fi, path)
        for i in range(len(path) - 1):
            h_edges.add(norm_edge(path[i], path[i + 1]))
        h_verts.update(path)

    return _rotations_from_faces(faces, verts)


# ---------------------------------------------------------------------------
# whole graphs


def embed_planar(g: Graph, *, check: bool = True) -> PlaneGraph:
    """Some plane drawing of ``g``; raises NonplanarError if none exists.

    Components are drawn side by side with their outer walks fused; all
    isolated vertices sit in the outer face.
    """
    rot: list[list[int]] = [[] for _ in range(g.n)]
    for block in biconnected_blocks(g):
        for v, cyc in _embed_block(block).items():
            rot[v].extend(cyc)

    comps = g.components()
    bearing = [c for c in comps if len(c) > 1 or g.degree(c[0]) > 0]
    outer_darts = []
    for comp in bearing:
        v = min(u for u in comp if g.degree(u) > 0)
        outer_darts.append((v, min(g.adj[v])))
    fused = [outer_darts] if len(outer_darts) > 1 else []
    outer = min(outer_darts) if outer_darts else None
    hosts = {
        v: (outer_darts[0] if outer_darts else None)
        for v in range(g.n)
        if g.degree(v) == 0
    }
    return PlaneGraph.build(
        g, rot, fused=fused, hosts=hosts, outer=outer, check=check
    )


def is_planar(g: Graph) -> bool:
    try:
        embed_planar(g, check=False)
    except NonplanarError:
        return False
    return True
