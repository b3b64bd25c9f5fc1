"""Completing a plane partial 3-tree into a stacked plane 3-tree.

The entry point is complete().  Given a valid drawing whose graph has
treewidth at most 3, it returns a stacked plane 3-tree on the same
vertices whose drawing extends the input: deleting the added edges from
the output reproduces the input drawing exactly, outer face included.

The recursion peels the instance along its cheapest separator:

* n <= 4: greedily triangulate every face (ends at K3 or K4);
* disconnected: complete the nest-innermost component and the rest
  separately, then plant the component inside the face it occupied;
* articulation vertex: same split with the cut vertex shared;
* 2-cut {a, b}: draw the edge ab first if absent, then split along it;
* 3-connected: remove a degree-3 vertex, patch its wedge with the
  missing rim edges, recurse, and stack the vertex back.

Each gluing step names explicit corner insertions, so the output is a
deterministic function of the input drawing.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from functools import lru_cache

from .errors import InternalK33, NoSuchFace, TooSmall
from .graph import Edge, Graph, norm_edge
from .ktree import Pes, is_stacked_plane_3tree, verify_pes
from .plane import (
    Dart,
    PlaneGraph,
    _UnionFind,
    delete_edges_plane,
    induced_plane,
    insert_at_corner,
    insert_edge_plane,
    locate_component_face,
    relabel_plane,
    stack_vertex,
)
from .tw3 import three_tree_completion

# How often each separator handler fired since the last reset.  One
# increment per handler entry; absorbed sub-cases count under their
# parent.
case_counts: dict[str, int] = {
    "disconnected": 0,
    "articulation": 0,
    "two_cut_edge": 0,
    "two_cut_missing": 0,
    "triconnected": 0,
}


def reset_case_counts() -> None:
    """Zero the counters and drop the memo, so the next run counts every
    handler entry from scratch."""
    for key in case_counts:
        case_counts[key] = 0
    _complete.cache_clear()


@dataclass(frozen=True)
class Completion:
    """A completed drawing together with its verification witnesses."""

    input: PlaneGraph
    output: PlaneGraph
    added: tuple[Edge, ...]
    pes: Pes
    provenance: dict[Dart | None, Dart | None]


# ---------------------------------------------------------------------------
# small helpers


def _lift_dart(vmap: tuple[int, ...], d: Dart) -> Dart:
    return (vmap[d[0]], vmap[d[1]])


def _lift_edges(vmap: tuple[int, ...], edges) -> list[Edge]:
    # vmap is increasing, so normalized edges stay normalized
    return [(vmap[u], vmap[v]) for u, v in edges]


def _walk_from(walk: tuple[Dart, ...], d: Dart) -> tuple[Dart, ...]:
    i = walk.index(d)
    return walk[i:] + walk[:i]


def _nest_free(p: PlaneGraph, keep: set[int]) -> bool:
    """Is nothing drawn inside the bounded faces of the restriction to
    ``keep``?  Faces of ``p`` merge across every edge leaving ``keep``;
    the restriction's faces are exactly those merged regions, so the
    test is whether every dropped vertex lands in the outer region."""
    fo = p._face_of_dart
    uf = _UnionFind()
    for u, v in p.graph.edges:
        if u in keep and v in keep:
            continue
        uf.union(fo[(u, v)], fo[(v, u)])
    outer = uf.find(p.outer)
    hosted = dict(p.hosts)
    for v in range(p.graph.n):
        if v in keep:
            continue
        fid = fo[(v, p.rotation[v][0])] if p.rotation[v] else hosted[v]
        if uf.find(fid) != outer:
            return False
    return True


def _pick_nested_free(
    p: PlaneGraph, comps: list[list[int]], cut: list[int]
) -> list[int]:
    """First component (smallest, then least label) whose restriction
    together with the cut vertices has nothing drawn inside its bounded
    faces.  Such a component always exists: innermost ones qualify."""
    cut_set = set(cut)
    for comp in sorted(comps, key=lambda c: (len(c), c[0])):
        if _nest_free(p, set(comp) | cut_set):
            return comp
    raise AssertionError("no component presents an empty interior")


def _merged_rows(
    n: int,
    o2: PlaneGraph,
    lift2: tuple[int, ...],
    o1: PlaneGraph,
    lift1: tuple[int, ...],
    skip1: frozenset[int],
) -> list[list[int]]:
    """Rotation rows of the union drawing, before corner splices.

    Vertices in ``skip1`` (the shared cut) keep their host-side row."""
    rows: list[list[int]] = [[] for _ in range(n)]
    for i, old in enumerate(lift2):
        rows[old] = [lift2[w] for w in o2.rotation[i]]
    for i, old in enumerate(lift1):
        if old in skip1:
            continue
        rows[old] = [lift1[w] for w in o1.rotation[i]]
    return rows


# ---------------------------------------------------------------------------
# base case: at most four vertices


def _fill_small(p: PlaneGraph) -> tuple[PlaneGraph, list[Edge]]:
    """Triangulate every face by repeated least-pair insertion."""
    added: list[Edge] = []
    while True:
        progressed = False
        for f in sorted(
            p.faces,
            key=lambda f: (1, f.id) if f.id is not None else (0, (0, 0)),
        ):
            vs = sorted(f.vertices())
            pair = next(
                (
                    (u, w)
                    for i, u in enumerate(vs)
                    for w in vs[i + 1 :]
                    if not p.graph.has_edge(u, w)
                ),
                None,
            )
            if pair is not None:
                p = insert_edge_plane(p, pair[0], pair[1], f.id, check=False)
                added.append(pair)
                progressed = True
                break
        if not progressed:
            return p, added


# ---------------------------------------------------------------------------
# disconnected input


def _case_disconnected(p: PlaneGraph) -> tuple[PlaneGraph, list[Edge]]:
    case_counts["disconnected"] += 1
    g = p.graph
    n = g.n
    comp = _pick_nested_free(p, g.components(), [])
    cset = set(comp)
    rest = [v for v in range(n) if v not in cset]
    ind2 = induced_plane(p, rest, check=False)
    f_t = locate_component_face(ind2, comp)
    o2, added2 = _complete(ind2.plane)
    lift2 = ind2.vmap
    if added2:
        prov2 = delete_edges_plane(o2, added2, check=False)[1]
        tid = min(fid for fid, t in prov2.items() if t == f_t)
    else:
        tid = f_t
    twalk = o2.walks[o2._walk_index[tid]]
    x = lift2[twalk[0][0]]
    y = lift2[twalk[0][1]]
    z = lift2[twalk[1][1]]
    added_out = _lift_edges(lift2, added2)

    if len(comp) <= 2:
        # absorb: stack the tiny component into the host triangle
        rows: list[list[int]] = [[] for _ in range(n)]
        for i, old in enumerate(lift2):
            rows[old] = [lift2[w] for w in o2.rotation[i]]
        edges = _lift_edges(lift2, o2.graph.edges)
        if len(comp) == 1:
            u = comp[0]
            rows[u] = [x, y, z]
            rows[x] = list(insert_at_corner(rows[x], z, [u]))
            rows[y] = list(insert_at_corner(rows[y], x, [u]))
            rows[z] = list(insert_at_corner(rows[z], y, [u]))
            connectors = [norm_edge(u, x), norm_edge(u, y), norm_edge(u, z)]
        else:
            # u stacked into (x, y, z), then v into the (x, y, u) piece
            u, v = comp
            rows[u] = [x, v, y, z]
            rows[v] = [x, y, u]
            rows[x] = list(insert_at_corner(rows[x], z, [v, u]))
            rows[y] = list(insert_at_corner(rows[y], x, [u, v]))
            rows[z] = list(insert_at_corner(rows[z], y, [u]))
            edges.append(norm_edge(u, v))
            connectors = [
                norm_edge(u, x),
                norm_edge(u, y),
                norm_edge(u, z),
                norm_edge(v, x),
                norm_edge(v, y),
            ]
        # splitting the outer face leaves every piece outer-eligible
        od = (x, y) if tid == o2.outer else _lift_dart(lift2, o2.outer)
        edges.extend(connectors)
        q = PlaneGraph.build(
            Graph(n, frozenset(edges)),
            rows,
            fused=(),
            hosts={},
            outer=od,
            check=False,
        )
        added_out.extend(connectors)
        return q, added_out

    # glue: complete the component, present its outer triangle, and
    # wire the two triangles into six new faces
    ind1 = induced_plane(p, comp, check=False)
    o1, added1 = _complete(ind1.plane)
    lift1 = ind1.vmap
    gwalk = o1.face(o1.outer).walks[0]
    a = lift1[gwalk[0][0]]
    b = lift1[gwalk[0][1]]
    c = lift1[gwalk[1][1]]
    rows = _merged_rows(n, o2, lift2, o1, lift1, frozenset())
    rows[x] = list(insert_at_corner(rows[x], z, [b, c, a]))
    rows[y] = list(insert_at_corner(rows[y], x, [a, b]))
    rows[z] = list(insert_at_corner(rows[z], y, [a]))
    rows[a] = list(insert_at_corner(rows[a], c, [y, z, x]))
    rows[b] = list(insert_at_corner(rows[b], a, [x, y]))
    rows[c] = list(insert_at_corner(rows[c], b, [x]))
    connectors = [
        norm_edge(x, a),
        norm_edge(x, b),
        norm_edge(x, c),
        norm_edge(y, a),
        norm_edge(y, b),
        norm_edge(z, a),
    ]
    od = (x, y) if tid == o2.outer else _lift_dart(lift2, o2.outer)
    edges = set(_lift_edges(lift2, o2.graph.edges))
    edges.update(_lift_edges(lift1, o1.graph.edges))
    edges.update(connectors)
    q = PlaneGraph.build(
        Graph(n, frozenset(edges)),
        rows,
        fused=(),
        hosts={},
        outer=od,
        check=False,
    )
    added_out.extend(_lift_edges(lift1, added1))
    added_out.extend(connectors)
    return q, added_out


# ---------------------------------------------------------------------------
# articulation vertex


def _case_articulation(p: PlaneGraph, a: int) -> tuple[PlaneGraph, list[Edge]]:
    case_counts["articulation"] += 1
    g = p.graph
    n = g.n
    h, vmap_h = g.induced([v for v in range(n) if v != a])
    comps = [[vmap_h[v] for v in comp] for comp in h.components()]
    comp = _pick_nested_free(p, comps, [a])
    cset = set(comp)
    # the component's spokes form one contiguous fan at a; w_b is the
    # outside neighbor just before the fan in circular order
    row = p.rotation[a]
    starts = [
        i for i, w in enumerate(row) if w in cset and row[i - 1] not in cset
    ]
    assert len(starts) == 1, f"fan of {sorted(cset)} at {a} not contiguous"
    w_b = row[starts[0] - 1]

    rest = [v for v in range(n) if v not in cset]
    ind2 = induced_plane(p, rest, check=False)
    lift2 = ind2.vmap
    back2 = {old: i for i, old in enumerate(lift2)}
    o2, added2 = _complete(ind2.plane)
    d_in = (back2[a], back2[w_b])
    t_id = o2.face_of_dart(d_in)
    twalk = _walk_from(o2.walks[o2._walk_index[d_in]], d_in)
    x = lift2[twalk[0][1]]  # x == w_b
    y = lift2[twalk[1][1]]
    added_out = _lift_edges(lift2, added2)
    od = (
        _lift_dart(lift2, t_id)
        if t_id == o2.outer
        else _lift_dart(lift2, o2.outer)
    )

    if len(comp) == 1:
        # leaf: stack the pendant into its corner triangle; the spoke to
        # a goes right back where the input drew it, between x and y
        u = comp[0]
        rows = [[] for _ in range(n)]
        for i, old in enumerate(lift2):
            rows[old] = [lift2[w] for w in o2.rotation[i]]
        rows[u] = [a, x, y]
        rows[a] = list(insert_at_corner(rows[a], y, [u]))
        rows[x] = list(insert_at_corner(rows[x], a, [u]))
        rows[y] = list(insert_at_corner(rows[y], x, [u]))
        connectors = [norm_edge(u, x), norm_edge(u, y)]
        edges = _lift_edges(lift2, o2.graph.edges)
        edges.append(norm_edge(u, a))
        edges.extend(connectors)
        if t_id == o2.outer:
            od = (a, x)
        q = PlaneGraph.build(
            Graph(n, frozenset(edges)),
            rows,
            fused=(),
            hosts={},
            outer=od,
            check=False,
        )
        added_out.extend(connectors)
        return q, added_out

    ind1 = induced_plane(p, comp + [a], check=False)
    o1, added1 = _complete(ind1.plane)
    lift1 = ind1.vmap
    a1 = lift1.index(a)
    prov1 = (
        delete_edges_plane(o1, added1, check=False)[1]
        if added1
        else {f.id: f.id for f in o1.faces}
    )
    # faces at a1 are the faces of its out-darts, one corner each
    fo1 = o1._face_of_dart
    cands: dict[Dart, Dart] = {}
    for w in o1.rotation[a1]:
        fid = fo1[(a1, w)]
        if prov1[fid] == ind1.plane.outer and fid not in cands:
            cands[fid] = (a1, w)
    assert cands, "no presentation face at the cut vertex"
    d1 = cands[min(cands)]
    t1w = _walk_from(o1.walks[o1._walk_index[d1]], d1)
    b = lift1[t1w[0][1]]
    c = lift1[t1w[1][1]]
    rows = _merged_rows(n, o2, lift2, o1, lift1, frozenset({a}))
    r = list(o1.rotation[a1])
    i = r.index(t1w[0][1])
    arc_a = [lift1[w] for w in r[i + 1 :] + r[:i]] + [b]
    rows[a] = list(insert_at_corner(rows[a], y, arc_a))
    rows[x] = list(insert_at_corner(rows[x], a, [c]))
    rows[y] = list(insert_at_corner(rows[y], x, [b, c]))
    rows[b] = list(insert_at_corner(rows[b], a, [y]))
    rows[c] = list(insert_at_corner(rows[c], b, [x, y]))
    connectors = [norm_edge(x, c), norm_edge(y, b), norm_edge(y, c)]
    edges = set(_lift_edges(lift2, o2.graph.edges))
    edges.update(_lift_edges(lift1, o1.graph.edges))
    edges.update(connectors)
    q = PlaneGraph.build(
        Graph(n, frozenset(edges)),
        rows,
        fused=(),
        hosts={},
        outer=od,
        check=False,
    )
    added_out.extend(_lift_edges(lift1, added1))
    added_out.extend(connectors)
    return q, added_out


# ---------------------------------------------------------------------------
# 2-cut


def _first_articulation_without(g: Graph, skip: int) -> int | None:
    """Least articulation vertex of g - skip, assuming g - skip is
    connected."""
    root = 1 if skip == 0 else 0
    disc = [0] * g.n
    low = [0] * g.n
    parent = [-1] * g.n
    arts: list[int] = []
    timer = 1
    disc[root] = low[root] = timer
    stack = [(root, iter(g.adj[root]))]
    root_children = 0
    while stack:
        v, it = stack[-1]
        advanced = False
        for w in it:
            if w == skip:
                continue
            if disc[w] == 0:
                timer += 1
                disc[w] = low[w] = timer
                parent[w] = v
                if v == root:
                    root_children += 1
                stack.append((w, iter(g.adj[w])))
                advanced = True
                break
            if w != parent[v] and disc[w] < low[v]:
                low[v] = disc[w]
        if not advanced:
            stack.pop()
            if stack:
                u = stack[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
                if u != root and low[v] >= disc[u]:
                    arts.append(u)
    if root_children > 1:
        arts.append(root)
    return min(arts) if arts else None


def _find_two_cut(g: Graph) -> tuple[int, int] | None:
    # the dispatcher only lands here on 2-connected graphs, so deleting
    # any one vertex leaves the rest connected
    for a0 in range(g.n):
        b0 = _first_articulation_without(g, a0)
        if b0 is not None:
            return a0, b0
    return None


def _case_two_cut(p: PlaneGraph, a0: int, b0: int) -> tuple[PlaneGraph, list[Edge]]:
    g = p.graph
    pre_added: list[Edge] = []
    if g.has_edge(a0, b0):
        case_counts["two_cut_edge"] += 1
    else:
        case_counts["two_cut_missing"] += 1
        # some face borders both cut vertices; drawing ab there keeps
        # the drawing planar and the graph within treewidth 3
        cands = [
            f.id for f in p.faces if a0 in f.vertices() and b0 in f.vertices()
        ]
        assert cands, f"no face borders both {a0} and {b0}"
        p = insert_edge_plane(p, a0, b0, min(cands), check=False)
        g = p.graph
        pre_added.append(norm_edge(a0, b0))
    n = g.n

    h, vmap_h = g.induced([v for v in range(n) if v not in (a0, b0)])
    comps = [[vmap_h[v] for v in comp] for comp in h.components()]
    comp = _pick_nested_free(p, comps, [a0, b0])
    cset = set(comp)
    rest = [v for v in range(n) if v not in cset]
    ind2 = induced_plane(p, rest, check=False)
    lift2 = ind2.vmap
    back2 = {old: i for i, old in enumerate(lift2)}
    f_t = locate_component_face(ind2, comp)
    az, bz = back2[a0], back2[b0]
    fo_t = ind2.plane._face_of_dart
    hits = [d for d in ((az, bz), (bz, az)) if fo_t[d] == f_t]
    assert len(hits) == 1, f"cut edge seen {len(hits)} times on its face"
    delta = hits[0]

    o2, added2 = _complete(ind2.plane)
    ind1 = induced_plane(p, comp + [a0, b0], check=False)
    o1, added1 = _complete(ind1.plane)
    lift1 = ind1.vmap
    # orient the cut edge so the component's face lies left of (a, b)
    a = lift2[delta[0]]
    b = lift2[delta[1]]
    t_id = o2.face_of_dart(delta)
    twalk = _walk_from(o2.walks[o2._walk_index[delta]], delta)
    x = lift2[twalk[1][1]]
    a1 = lift1.index(a)
    b1 = lift1.index(b)
    assert ind1.plane.face_of_dart((b1, a1)) == ind1.plane.outer
    t1w = _walk_from(o1.walks[o1._walk_index[(b1, a1)]], (b1, a1))
    c = lift1[t1w[1][1]]

    rows = _merged_rows(n, o2, lift2, o1, lift1, frozenset({a, b}))
    r = list(o1.rotation[a1])
    i = r.index(b1)
    rows[a] = list(
        insert_at_corner(rows[a], x, [lift1[w] for w in r[i + 1 :] + r[:i]])
    )
    r = list(o1.rotation[b1])
    i = r.index(a1)
    rows[b] = list(
        insert_at_corner(rows[b], a, [lift1[w] for w in r[i + 1 :] + r[:i]])
    )
    rows[x] = list(insert_at_corner(rows[x], b, [c]))
    rows[c] = list(insert_at_corner(rows[c], a, [x]))
    connector = norm_edge(x, c)
    od = (b, x) if t_id == o2.outer else _lift_dart(lift2, o2.outer)
    edges = set(_lift_edges(lift2, o2.graph.edges))
    edges.update(_lift_edges(lift1, o1.graph.edges))
    edges.add(connector)
    q = PlaneGraph.build(
        Graph(n, frozenset(edges)),
        rows,
        fused=(),
        hosts={},
        outer=od,
        check=False,
    )
    added_out = pre_added + _lift_edges(lift2, added2)
    added_out.extend(_lift_edges(lift1, added1))
    added_out.append(connector)
    return q, added_out


# ---------------------------------------------------------------------------
# 3-connected


def _case_triconnected(p: PlaneGraph) -> tuple[PlaneGraph, list[Edge]]:
    case_counts["triconnected"] += 1
    g = p.graph
    n = g.n
    fc = three_tree_completion(g)  # rejects treewidth above 3
    u_h = fc.pes.order[-1]
    rot_u = p.rotation[u_h]
    assert len(rot_u) == 3, f"late vertex {u_h} has degree {len(rot_u)}"
    rim_set = set(rot_u)
    sub, _ = g.induced([v for v in range(n) if v not in rim_set])
    if len(sub.components()) != 2:
        raise InternalK33(
            f"neighborhood {sorted(rim_set)} separates more than two parts"
        )

    rims = [
        (rot_u[0], rot_u[1]),
        (rot_u[1], rot_u[2]),
        (rot_u[2], rot_u[0]),
    ]
    missing = [norm_edge(t, w) for t, w in rims if not g.has_edge(t, w)]
    succ_u = {rot_u[i]: rot_u[(i + 1) % 3] for i in range(3)}
    pred_u = {rot_u[i]: rot_u[(i - 1) % 3] for i in range(3)}

    def dn(v: int) -> int:
        return v if v < u_h else v - 1

    rows: list[list[int]] = []
    for v in range(n):
        if v == u_h:
            continue
        row = list(p.rotation[v])
        if v in rim_set:
            # the missing rim edges take over the wedge slots on either
            # side of the deleted spoke: successor side first
            i = row.index(u_h)
            arc = [
                w for w in (succ_u[v], pred_u[v]) if not g.has_edge(v, w)
            ]
            row[i : i + 1] = arc
        rows.append([dn(w) for w in row])
    bar_edges = [
        (dn(u), dn(w)) for u, w in g.edges if u != u_h and w != u_h
    ] + [(dn(u), dn(w)) for u, w in missing]
    # p is connected here, so its outer face has a single walk
    outer_walk = p.walks[p._walk_index[p.outer]]
    d_rep = min(d for d in outer_walk if u_h not in d)
    d_rep_bar = (dn(d_rep[0]), dn(d_rep[1]))
    p_bar = PlaneGraph.build(
        Graph(n - 1, frozenset(bar_edges)),
        rows,
        fused=(),
        hosts={},
        outer=d_rep_bar,
        check=False,
    )
    o_bar, added_bar = _complete(p_bar)

    d_c = (dn(rot_u[0]), dn(rot_u[1]))
    f_id = o_bar.face_of_dart(d_c)
    assert set(o_bar.walks[o_bar._walk_index[d_c]]) == {
        d_c,
        (dn(rot_u[1]), dn(rot_u[2])),
        (dn(rot_u[2]), dn(rot_u[0])),
    }, "central triangle disturbed"
    if f_id == o_bar.outer:
        stacked, _ = stack_vertex(o_bar, f_id, outer_dart=d_rep_bar, check=False)
    else:
        stacked, _ = stack_vertex(o_bar, f_id, check=False)
    perm = [i if i < u_h else i + 1 for i in range(n - 1)] + [u_h]
    q = relabel_plane(stacked, perm, check=False)
    assert q.rotation[u_h] == p.rotation[u_h]

    def up(v: int) -> int:
        return v if v < u_h else v + 1

    added_out = [norm_edge(up(u), up(w)) for u, w in added_bar]
    added_out.extend(missing)
    return q, added_out


# ---------------------------------------------------------------------------
# dispatch


@lru_cache(maxsize=1 << 15)
def _complete(p: PlaneGraph) -> tuple[PlaneGraph, tuple[Edge, ...]]:
    # pure in p, so sub-drawings shared between instances are completed
    # once; reset_case_counts drops the memo
    g = p.graph
    n = g.n
    if n <= 4:
        out, added = _fill_small(p)
        return out, tuple(added)
    connected = g.is_connected()
    if connected and g.m == 3 * n - 6:
        if isinstance(is_stacked_plane_3tree(p), Pes):
            return p, ()
    if not connected:
        out, added = _case_disconnected(p)
    elif (art := _first_articulation_without(g, -1)) is not None:
        out, added = _case_articulation(p, art)
    elif (cut := _find_two_cut(g)) is not None:
        out, added = _case_two_cut(p, cut[0], cut[1])
    else:
        out, added = _case_triconnected(p)
    return out, tuple(added)


def complete(
    p: PlaneGraph,
    *,
    anchor_vertex: int | None = None,
    anchor_edge: tuple[int, int] | None = None,
    check: bool = True,
) -> Completion:
    """Augment a plane partial 3-tree drawing into a stacked plane 3-tree.

    Returns the completed drawing, the added edges, an elimination
    scheme, and a face provenance map (output face -> input face it was
    carved from).  Raises TooSmall below three vertices and
    TreewidthExceeded when the graph is no partial 3-tree.  Anchors, if
    given, force the output's outer face to be an outer-extending
    triangle containing the requested vertex or edge; NoSuchFace means
    no such triangle exists.

    With check=False the input is not validated, the output is not
    re-verified against the input, and the provenance map stays empty
    unless an anchor forces its computation.
    """
    if check:
        p.validate()
    n = p.n
    if n < 3:
        raise TooSmall(f"completion needs n >= 3, got {n}")
    limit = 1000 + 40 * n
    old_limit = sys.getrecursionlimit()
    if old_limit < limit:
        sys.setrecursionlimit(limit)
    try:
        out, raw = _complete(p)
    finally:
        if old_limit < limit:
            sys.setrecursionlimit(old_limit)
    added = tuple(sorted({norm_edge(u, w) for u, w in raw}))
    assert len(added) == 3 * n - 6 - p.graph.m
    prov: dict[Dart | None, Dart | None] = {}
    if check or anchor_vertex is not None or anchor_edge is not None:
        shrunk, prov = delete_edges_plane(out, added, check=False)
        if check:
            assert shrunk == p, "output does not extend the input"
    if anchor_vertex is not None or anchor_edge is not None:
        want = norm_edge(*anchor_edge) if anchor_edge is not None else None
        cands = []
        for f in out.faces:
            if prov[f.id] != p.outer:
                continue
            vs = f.vertices()
            if anchor_vertex is not None and anchor_vertex not in vs:
                continue
            if want is not None and not (want[0] in vs and want[1] in vs):
                continue
            cands.append(f.id)
        if not cands:
            raise NoSuchFace("no outer-extending triangle fits the anchor")
        fid = min(cands)
        if fid != out.outer:
            out = PlaneGraph(out.graph, out.rotation, out.fused, out.hosts, fid)
    pes = is_stacked_plane_3tree(out)
    assert isinstance(pes, Pes), getattr(pes, "reason", pes)
    if check:
        assert verify_pes(out.graph, pes, strict=True)
    return Completion(p, out, added, pes, prov)
