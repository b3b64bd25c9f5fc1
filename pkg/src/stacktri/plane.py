"""Plane graphs: combinatorial embeddings with nested components.

A drawing is stored as a rotation system (CCW neighbor cycles) plus the
bookkeeping that pins down how components nest inside each other:

  * ``fused``  : face classes.  A face bounded by walks of several
    components (a ring of one component drawn inside a face of another)
    is recorded as a set of boundary-walk representatives merged into a
    single face.
  * ``hosts``  : for every isolated vertex, the face it sits in.
  * ``outer``  : the unbounded face.

Faces are traced with the left-region rule: the successor of dart (u, v)
is (v, w) where w precedes u in the rotation at v.  Every face keeps its
region to the left of its walks; the outer face's walks run clockwise.

Faces are named by their lexicographically least dart (FaceId); an
edgeless drawing has the single face ``None``.  All stored fields are
canonical, so dataclass equality coincides with equality of drawings.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import (
    InvalidEmbedding,
    InvalidGraph,
    NoSuchFace,
    SplitAcrossFaces,
)
from .graph import Graph, norm_edge

Dart = tuple[int, int]
FaceId = Dart | None


# ---------------------------------------------------------------------------
# small helpers


def _rotate_min_first(cycle: Sequence, key=None) -> tuple:
    """Rotate a cyclic sequence so its minimum element comes first."""
    if not cycle:
        return tuple(cycle)
    seq = list(cycle)
    i = seq.index(min(seq, key=key) if key else min(seq))
    return tuple(seq[i:] + seq[:i])


class _UnionFind:
    def __init__(self) -> None:
        self.parent: dict = {}

    def find(self, x):
        p = self.parent
        while x in p:
            x = p[x]
        return x

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # keep the smaller root so representatives stay deterministic
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def trace_walks(rotation: Sequence[Sequence[int]]) -> list[tuple[Dart, ...]]:
    """All face walks of a rotation system, canonicalized and sorted.

    Each walk is rotated so its least dart comes first; the list is
    sorted by that dart.
    """
    nxt: dict[Dart, Dart] = {}
    for v, cyc in enumerate(rotation):
        if not cyc:
            continue
        prev = cyc[-1]
        for w in cyc:
            # pred of w at v is prev: succ((w, v)) = (v, prev)
            nxt[(w, v)] = (v, prev)
            prev = w
    walks: list[tuple[Dart, ...]] = []
    while nxt:
        start = next(iter(nxt))
        walk = []
        d = start
        while True:
            walk.append(d)
            nd = nxt.pop(d)
            if nd == start:
                break
            d = nd
        i = walk.index(min(walk))
        walks.append(tuple(walk[i:] + walk[:i]))
    walks.sort()
    return walks


# ---------------------------------------------------------------------------
# faces


@dataclass(frozen=True)
class Face:
    """One face: its id, boundary walks, and hosted isolated vertices."""

    id: Dart | None
    walks: tuple[tuple[Dart, ...], ...]
    isolated: tuple[int, ...]

    def vertices(self) -> set[int]:
        out = {u for walk in self.walks for u, _ in walk}
        out.update(self.isolated)
        return out


# ---------------------------------------------------------------------------
# the drawing itself


@dataclass(frozen=True)
class PlaneGraph:
    graph: Graph
    rotation: tuple[tuple[int, ...], ...]
    fused: frozenset[frozenset[Dart]]
    hosts: tuple[tuple[int, Dart | None], ...]
    outer: Dart | None

    # -- construction ------------------------------------------------------

    @staticmethod
    def build(
        graph: Graph,
        rotation: Sequence[Sequence[int]] | Mapping[int, Sequence[int]],
        *,
        fused: Iterable[Iterable[Dart]] = (),
        hosts: Mapping[int, Dart | None] | None = None,
        outer: Dart | None = None,
        check: bool = True,
    ) -> PlaneGraph:
        """Canonicalize and (optionally) validate a drawing.

        ``fused`` classes, ``hosts`` values and ``outer`` may name a face
        by any dart on it; they are normalized to face ids here.
        """
        n = graph.n
        if isinstance(rotation, Mapping):
            rot_rows: list[Sequence[int]] = [rotation.get(v, ()) for v in range(n)]
        else:
            rot_rows = list(rotation)
            if len(rot_rows) != n:
                raise InvalidEmbedding(
                    f"rotation has {len(rot_rows)} rows for n={n}"
                )
        canon_rot = tuple(_rotate_min_first(row) for row in rot_rows)
        if check:
            for v in range(n):
                if tuple(sorted(canon_rot[v])) != graph.adj[v]:
                    raise InvalidEmbedding(
                        f"rotation at {v} is not a permutation of its neighbors"
                    )
        walks = trace_walks(canon_rot)

        if not fused and not hosts:
            # common internal shape: every walk is its own face
            canon_outer = None
            if outer is not None:
                for w in walks:
                    if outer in w:
                        canon_outer = w[0]
                        break
                else:
                    raise InvalidEmbedding(f"dart {outer} names no face walk")
            p = PlaneGraph(graph, canon_rot, frozenset(), (), canon_outer)
            p.__dict__["walks"] = tuple(walks)
            if check:
                p._validate()
            return p
        walk_of: dict[Dart, int] = {}
        for i, w in enumerate(walks):
            for d in w:
                walk_of[d] = i

        def wid(d: Dart) -> int:
            if d not in walk_of:
                raise InvalidEmbedding(f"dart {d} names no face walk")
            return walk_of[d]

        # fuse walks into faces
        uf = _UnionFind()
        for cls in fused:
            ids = sorted({wid(d) for d in cls})
            if len(ids) < 2:
                raise InvalidEmbedding("fused class with fewer than two walks")
            for other in ids[1:]:
                uf.union(ids[0], other)
        groups: dict[int, list[int]] = {}
        for i in range(len(walks)):
            groups.setdefault(uf.find(i), []).append(i)
        face_id_of_walk: dict[int, Dart] = {}
        face_ids: list[Dart | None] = []
        canon_fused: set[frozenset[Dart]] = set()
        for members in groups.values():
            fid = min(walks[i][0] for i in members)
            face_ids.append(fid)
            for i in members:
                face_id_of_walk[i] = fid
            if len(members) > 1:
                canon_fused.add(frozenset(walks[i][0] for i in members))
        if not walks:
            face_ids = [None]

        def face_of(d: Dart | None) -> Dart | None:
            if d is None:
                if walks:
                    raise InvalidEmbedding("None names no face once edges exist")
                return None
            return face_id_of_walk[wid(d)]

        host_map = dict(hosts) if hosts else {}
        canon_hosts = tuple(
            sorted((v, face_of(d)) for v, d in host_map.items())
        )
        canon_outer = face_of(outer)

        p = PlaneGraph(
            graph, canon_rot, frozenset(canon_fused), canon_hosts, canon_outer
        )
        # hand the freshly traced walks to the instance cache
        p.__dict__["walks"] = tuple(walks)
        if check:
            p._validate()
        return p

    # -- cached views ------------------------------------------------------

    @cached_property
    def walks(self) -> tuple[tuple[Dart, ...], ...]:
        return tuple(trace_walks(self.rotation))

    @cached_property
    def _walk_index(self) -> dict[Dart, int]:
        out: dict[Dart, int] = {}
        for i, w in enumerate(self.walks):
            for d in w:
                out[d] = i
        return out

    @cached_property
    def _walk_face_ids(self) -> tuple[Dart, ...]:
        """Face id of each walk, indexed like ``walks``."""
        if not self.fused:
            return tuple(w[0] for w in self.walks)
        uf = _UnionFind()
        for cls in self.fused:
            ids = sorted(self._walk_index[d] for d in cls)
            for other in ids[1:]:
                uf.union(ids[0], other)
        groups: dict[int, list[int]] = {}
        for i in range(len(self.walks)):
            groups.setdefault(uf.find(i), []).append(i)
        fid_of = [None] * len(self.walks)
        for members in groups.values():
            fid = min(self.walks[i][0] for i in members)
            for i in members:
                fid_of[i] = fid
        return tuple(fid_of)

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        iso: dict[Dart | None, list[int]] = {}
        for v, fid in self.hosts:
            iso.setdefault(fid, []).append(v)
        if not self.walks:
            return (Face(None, (), tuple(sorted(iso.get(None, ())))),)
        group: dict[Dart, list[tuple[Dart, ...]]] = {}
        for i, w in enumerate(self.walks):
            group.setdefault(self._walk_face_ids[i], []).append(w)
        out = [
            Face(fid, tuple(sorted(ws)), tuple(sorted(iso.get(fid, ()))))
            for fid, ws in group.items()
        ]
        if len(out) > 1:
            out.sort(key=lambda f: f.id)
        return tuple(out)

    @cached_property
    def _face_index(self) -> dict[Dart | None, Face]:
        return {f.id: f for f in self.faces}

    @cached_property
    def _face_of_dart(self) -> dict[Dart, Dart]:
        out: dict[Dart, Dart] = {}
        for i, w in enumerate(self.walks):
            fid = self._walk_face_ids[i]
            for d in w:
                out[d] = fid
        return out

    # -- queries -----------------------------------------------------------

    @property
    def n(self) -> int:
        return self.graph.n

    def face(self, fid: Dart | None) -> Face:
        try:
            return self._face_index[fid]
        except KeyError:
            raise NoSuchFace(f"no face with id {fid}") from None

    def face_of_dart(self, d: Dart) -> Dart:
        try:
            return self._face_of_dart[d]
        except KeyError:
            raise NoSuchFace(f"dart {d} lies on no face") from None

    def face_ids(self) -> list[Dart | None]:
        if not self.walks:
            return [None]
        return sorted(set(self._walk_face_ids))

    def host_of(self, v: int) -> Dart | None:
        for u, fid in self.hosts:
            if u == v:
                return fid
        raise NoSuchFace(f"vertex {v} is not hosted (not isolated)")

    # -- validation --------------------------------------------------------

    def _validate(self) -> None:
        g = self.graph
        comps = g.components()
        comp_of = [0] * g.n
        for ci, comp in enumerate(comps):
            for v in comp:
                comp_of[v] = ci
        edge_bearing = sorted({comp_of[u] for u, _ in g.edges})

        # per-component Euler relation at genus 0
        walks_in: dict[int, int] = {}
        for w in self.walks:
            walks_in[comp_of[w[0][0]]] = walks_in.get(comp_of[w[0][0]], 0) + 1
        comp_m: dict[int, int] = {}
        for u, v in g.edges:
            comp_m[comp_of[u]] = comp_m.get(comp_of[u], 0) + 1
        for ci in edge_bearing:
            n_i = len(comps[ci])
            if n_i - comp_m[ci] + walks_in.get(ci, 0) != 2:
                raise InvalidEmbedding(
                    f"component {ci}: rotation is not a sphere embedding"
                )

        # fused classes stitch the edge-bearing components into one tree
        merges = 0
        uf = _UnionFind()
        for cls in self.fused:
            comps_seen = [comp_of[d[0]] for d in cls]
            if len(set(comps_seen)) != len(comps_seen):
                raise InvalidEmbedding(
                    "fused class holds two walks of one component"
                )
            merges += len(cls) - 1
            first = comps_seen[0]
            for ci in comps_seen[1:]:
                uf.union(first, ci)
        want = max(len(edge_bearing) - 1, 0)
        if merges != want:
            raise InvalidEmbedding(
                f"{merges} face merges recorded, nesting needs exactly {want}"
            )
        if edge_bearing:
            root = uf.find(edge_bearing[0])
            if any(uf.find(ci) != root for ci in edge_bearing):
                raise InvalidEmbedding("face merges do not connect all components")

        # hosts exactly for isolated vertices, pointing at real faces
        ids = set()
        for f in self.faces:
            ids.add(f.id)
        isolated = {v for v in range(g.n) if g.degree(v) == 0}
        host_keys = {v for v, _ in self.hosts}
        if host_keys != isolated:
            raise InvalidEmbedding(
                f"hosts given for {sorted(host_keys)}, isolated are {sorted(isolated)}"
            )
        for _, fid in self.hosts:
            if fid not in ids:
                raise InvalidEmbedding(f"host face {fid} does not exist")

        # outer face must exist (None only when edgeless)
        if self.walks:
            if self.outer is None or self.outer not in ids:
                raise InvalidEmbedding(f"outer face {self.outer} does not exist")
        else:
            if self.outer is not None:
                raise InvalidEmbedding("edgeless drawing must have outer None")

    def validate(self) -> None:
        """Re-run all structural checks (permutations, Euler, nesting)."""
        for v in range(self.graph.n):
            if tuple(sorted(self.rotation[v])) != self.graph.adj[v]:
                raise InvalidEmbedding(
                    f"rotation at {v} is not a permutation of its neighbors"
                )
        self._validate()


# ---------------------------------------------------------------------------
# canonical small drawings


def triangle_plane() -> PlaneGraph:
    """The canonical drawing of a triangle on vertices 0, 1, 2.

    Interior is the face of dart (0, 1); outer is the face of (0, 2).
    """
    g = Graph.build(3, [(0, 1), (1, 2), (2, 0)])
    return PlaneGraph.build(
        g, [(1, 2), (2, 0), (0, 1)], outer=(0, 2), check=False
    )


# ---------------------------------------------------------------------------
# deletion and restriction


def delete_edges_plane(
    p: PlaneGraph, drop: Iterable[tuple[int, int]], *, check: bool = True
) -> tuple[PlaneGraph, dict[Dart | None, Dart | None]]:
    """Erase edges from a drawing, keeping everything else in place.

    Returns the smaller drawing and a face map: each face of ``p`` lies
    inside exactly one face of the result.
    """
    gone = {norm_edge(u, v) for u, v in drop}
    new_graph = p.graph.without_edges(gone)
    new_rot = []
    for v, cyc in enumerate(p.rotation):
        new_rot.append(
            _rotate_min_first(
                [w for w in cyc if norm_edge(v, w) not in gone]
            )
        )
    new_walks = trace_walks(new_rot)

    # regions: faces of p merge across every erased edge
    uf = _UnionFind()
    fo = p._face_of_dart
    for u, v in gone:
        uf.union(fo[(u, v)], fo[(v, u)])
    region = uf.find

    # group the surviving walks by region
    walks_of_region: dict[Dart, list[tuple[Dart, ...]]] = {}
    for w in new_walks:
        r = region(fo[w[0]])
        walks_of_region.setdefault(r, []).append(w)

    new_fused = [
        [w[0] for w in ws] for ws in walks_of_region.values() if len(ws) > 1
    ]

    def new_face_of_region(r: Dart) -> Dart | None:
        ws = walks_of_region.get(r)
        return min(w[0] for w in ws) if ws else None

    new_hosts: dict[int, Dart | None] = {}
    for v, fid in p.hosts:
        new_hosts[v] = new_face_of_region(region(fid))
    for v in range(p.graph.n):
        if not new_rot[v] and p.rotation[v]:
            r = region(fo[(v, p.rotation[v][0])])
            new_hosts[v] = new_face_of_region(r)

    new_outer = new_face_of_region(region(p.outer)) if p.walks else None

    # rows are canonical and all ids are already walk minima, so the
    # drawing can be assembled without a second walk trace
    q = PlaneGraph(
        new_graph,
        tuple(new_rot),
        frozenset(frozenset(c) for c in new_fused),
        tuple(sorted(new_hosts.items())),
        new_outer,
    )
    q.__dict__["walks"] = tuple(new_walks)
    if check:
        q._validate()
    face_map = {
        fid: new_face_of_region(region(fid)) for fid in p.face_ids()
    }
    return q, face_map


def extends(
    big: PlaneGraph, small: PlaneGraph, added: Iterable[tuple[int, int]]
) -> bool:
    """Does ``big`` extend the drawing ``small`` by exactly ``added``?"""
    try:
        shrunk, _ = delete_edges_plane(big, added, check=False)
    except InvalidGraph:
        return False
    return shrunk == small


@dataclass
class Induced:
    """Result of restricting a drawing to a vertex subset."""

    plane: PlaneGraph
    vmap: tuple[int, ...]  # new id -> old id
    face_map: dict  # face of the original -> face of the restriction
    dropped_in: dict  # dropped vertex -> face of the restriction it sat in


def induced_plane(
    p: PlaneGraph, keep: Iterable[int], *, check: bool = True
) -> Induced:
    """Restrict a drawing to the induced subgraph on ``keep``."""
    keep_set = set(keep)
    vmap = tuple(sorted(keep_set))
    back = {old: new for new, old in enumerate(vmap)}
    drop_edges = [
        e for e in p.graph.edges if e[0] not in keep_set or e[1] not in keep_set
    ]
    d, fm1 = delete_edges_plane(p, drop_edges, check=False)

    def rename_dart(dart: Dart | None) -> Dart | None:
        if dart is None:
            return None
        return (back[dart[0]], back[dart[1]])

    # renaming is monotone, so min-first rows, walk heads and face ids
    # all survive it; the restriction is just the deletion relabeled
    sub_graph, _ = p.graph.induced(vmap)
    sub_rot = tuple(tuple(back[w] for w in d.rotation[old]) for old in vmap)
    sub_fused = frozenset(
        frozenset(rename_dart(dd) for dd in cls) for cls in d.fused
    )
    sub_hosts = tuple(
        sorted((back[v], rename_dart(fid)) for v, fid in d.hosts if v in keep_set)
    )
    q = PlaneGraph(
        sub_graph, sub_rot, sub_fused, sub_hosts, rename_dart(d.outer)
    )
    q.__dict__["walks"] = tuple(
        tuple((back[a], back[b]) for a, b in w) for w in d.walks
    )
    if check:
        q._validate()

    face_map = {old: rename_dart(mid) for old, mid in fm1.items()}
    dropped_in = {
        v: rename_dart(fid) for v, fid in d.hosts if v not in keep_set
    }
    return Induced(q, vmap, face_map, dropped_in)


def locate_component_face(ind: Induced, comp: Iterable[int]):
    """Face of the restriction where a dropped component sits.

    Raises SplitAcrossFaces if its vertices report different faces.
    """
    fids = {ind.dropped_in[v] for v in comp}
    if len(fids) != 1:
        raise SplitAcrossFaces(
            f"component {sorted(comp)} touches faces {sorted(fids, key=repr)}"
        )
    return next(iter(fids))


# ---------------------------------------------------------------------------
# insertion surgery


def insert_at_corner(
    cycle: Sequence[int], in_tail: int, arc: Sequence[int]
) -> tuple[int, ...]:
    """Insert ``arc`` into a rotation cycle at the corner entered from
    ``in_tail``: the corner (in-dart (t, v), out-dart (v, w)) satisfies
    pred(t) = w, and the arc lands between w and t."""
    seq = list(cycle)
    i = seq.index(in_tail)
    return tuple(seq[:i] + list(arc) + seq[i:])


def _corner_in_tail(p: PlaneGraph, face: Face, v: int) -> int | None:
    """Tail of the least in-dart of v on the face, or None if v is hosted."""
    if v in face.isolated:
        return None
    cands = [d[0] for w in face.walks for d in w if d[1] == v]
    if not cands:
        raise NoSuchFace(f"vertex {v} not on face {face.id}")
    return min(cands)


def insert_edge_plane(
    p: PlaneGraph,
    u: int,
    v: int,
    face_id: Dart | None,
    *,
    check: bool = True,
) -> PlaneGraph:
    """Draw the edge u-v inside the given face.

    Both endpoints must lie on the face (on its walks or hosted in it).
    When several corners of an endpoint border the face, the corner with
    the least in-dart is used.  If the edge splits the face, the piece
    containing the face's id dart inherits its hosts, other walks, and
    outer status.
    """
    if u == v:
        raise InvalidGraph("cannot insert a loop")
    if p.graph.has_edge(u, v):
        raise InvalidGraph(f"edge ({u}, {v}) already present")
    face = p.face(face_id)
    tails = {u: _corner_in_tail(p, face, u), v: _corner_in_tail(p, face, v)}

    rot = [list(c) for c in p.rotation]
    for a, b in ((u, v), (v, u)):
        t = tails[a]
        if t is None:
            rot[a] = [b]
        else:
            rot[a] = list(insert_at_corner(rot[a], t, [b]))
    new_graph = p.graph.with_edges([(u, v)])
    new_walks = trace_walks(rot)
    widx: dict[Dart, int] = {}
    for i, w in enumerate(new_walks):
        for d in w:
            widx[d] = i

    changed = {widx[(u, v)], widx[(v, u)]}
    old_wids = {p._walk_index[w[0]] for w in face.walks}
    new_hosts = {w: fid for w, fid in p.hosts}
    new_fused = [list(cls) for cls in p.fused if not (cls & {d for w in face.walks for d in w})]
    new_outer = p.outer

    if len(changed) == 1:
        # no split: everything on the face stays one face
        i = changed.pop()
        members = {new_walks[i][0]}
        for j in old_wids:
            rep = p.walks[j][0]
            if rep in widx:
                members.add(new_walks[widx[rep]][0])
        if len(members) > 1:
            new_fused.append(sorted(members))
        for a in (u, v):
            new_hosts.pop(a, None)
        rep_dart = (u, v)
        if p.outer == face_id:
            new_outer = rep_dart
        for w, fid in list(new_hosts.items()):
            if fid == face_id:
                new_hosts[w] = rep_dart
    else:
        # split: the piece holding the face's id dart (or, if that dart sits
        # on an untouched nested walk, the piece with the least new dart)
        # inherits the face's other walks, hosts, and outer status
        keep_i = widx[face_id]
        if keep_i not in changed:
            keep_i = min(changed, key=lambda i: new_walks[i][0])
        group_keep = {new_walks[keep_i][0]}
        for j in old_wids:
            od = p.walks[j][0]
            if widx[od] not in changed:
                group_keep.add(new_walks[widx[od]][0])
        if len(group_keep) > 1:
            new_fused.append(sorted(group_keep))
        for a in (u, v):
            new_hosts.pop(a, None)
        if p.outer == face_id:
            new_outer = new_walks[keep_i][0]
        for w, fid in list(new_hosts.items()):
            if fid == face_id:
                new_hosts[w] = new_walks[keep_i][0]

    return PlaneGraph.build(
        new_graph,
        rot,
        fused=new_fused,
        hosts=new_hosts,
        outer=new_outer,
        check=check,
    )


def stack_vertex(
    p: PlaneGraph,
    face_id: Dart,
    *,
    outer_dart: Dart | None = None,
    check: bool = True,
) -> tuple[PlaneGraph, int]:
    """Subdivide a triangular face with a fresh vertex joined to its corners.

    The new vertex gets id p.n.  If the face is the outer face, the new
    outer face is the piece containing the old walk's least dart, unless
    ``outer_dart`` overrides the choice with another dart of the walk.
    """
    face = p.face(face_id)
    if len(face.walks) != 1 or len(face.walks[0]) != 3 or face.isolated:
        raise NoSuchFace(f"face {face_id} is not an empty triangle")
    (walk,) = face.walks
    (x, y), (_, z), _ = walk[0], walk[1], walk[2]
    vnew = p.graph.n
    rot = [list(c) for c in p.rotation] + [[x, y, z]]
    # walk (x,y),(y,z),(z,x): at x the corner entered from z, etc.
    for a, t in ((x, z), (y, x), (z, y)):
        rot[a] = list(insert_at_corner(rot[a], t, [vnew]))
    new_graph = Graph(
        p.graph.n + 1,
        p.graph.edges | {(x, vnew), (y, vnew), (z, vnew)},
    )
    new_outer = p.outer
    if p.outer == face_id:
        d = outer_dart if outer_dart is not None else walk[0]
        if d not in walk:
            raise NoSuchFace(f"outer_dart {d} not on face {face_id}")
        new_outer = d
    q = PlaneGraph.build(
        new_graph,
        rot,
        fused=[list(c) for c in p.fused],
        hosts=dict(p.hosts),
        outer=new_outer,
        check=check,
    )
    return q, vnew


def relabel_plane(p: PlaneGraph, perm: Sequence[int], *, check: bool = False) -> PlaneGraph:
    """Rename vertices: perm[old_id] = new_id (a bijection)."""
    n = p.graph.n
    if sorted(perm) != list(range(n)):
        raise InvalidGraph("relabel needs a permutation")
    new_edges = [(perm[u], perm[v]) for u, v in p.graph.edges]
    new_rot: list[tuple[int, ...]] = [()] * n
    for v in range(n):
        new_rot[perm[v]] = tuple(perm[w] for w in p.rotation[v])

    def rd(d: Dart | None) -> Dart | None:
        return None if d is None else (perm[d[0]], perm[d[1]])

    return PlaneGraph.build(
        Graph.build(n, new_edges),
        new_rot,
        fused=[[rd(d) for d in cls] for cls in p.fused],
        hosts={perm[v]: rd(f) for v, f in p.hosts},
        outer=rd(p.outer),
        check=check,
    )
