"""Treewidth-3 recognition by reduction rules, and 3-tree completion.

``reduce_tw3`` applies six local rules until the graph is empty (accept)
or no rule fires (reject).  The rules, in priority tiers:

  tier 0 (no fill): remove an isolated vertex, a leaf, a degree-2 vertex
    with adjacent neighbors, or a degree-3 vertex with pairwise adjacent
    neighbors;
  tier 1: remove a degree-2 vertex filling the missing neighbor edge, or
    a degree-3 vertex with at least one neighbor edge present, filling
    the rest;
  tier 2 (buddy): remove two degree-3 vertices sharing one neighborhood,
    filling the neighborhood triangle;
  tier 3 (cube): remove a degree-3 vertex and its three degree-3,
    pairwise nonadjacent neighbors when their outer neighborhoods pair
    up into three shared vertices, filling that triangle.

Within a tier the lowest vertex id (lexicographic tuple for pairs) wins.
The accept verdict is order-independent; lower tiers first keeps the
fill empty on graphs that already are 3-trees.

``three_tree_completion`` replays an accepting trace backwards into a
tree of size-4 cliques, yielding a spanning 3-tree supergraph, the fill
edge set, and a strict elimination scheme.

``treewidth_oracle`` is an exact exponential check, guarded to n <= 18.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import TooLarge, TooSmall, TreewidthExceeded
from .graph import Edge, Graph
from .ktree import Pes, verify_pes


# ---------------------------------------------------------------------------
# trace data


@dataclass(frozen=True)
class RuleApp:
    rule: str  # islet | twig | series | triangle | buddy | cube
    removed: tuple[int, ...]
    support: tuple[int, ...]  # surviving vertices the rule leaned on
    fill: tuple[Edge, ...]


@dataclass(frozen=True)
class ReductionTrace:
    apps: tuple[RuleApp, ...]

    def fill_edges(self) -> list[Edge]:
        out: set[Edge] = set()
        for app in self.apps:
            out.update(app.fill)
        return sorted(out)


@dataclass(frozen=True)
class Reject:
    reason: str
    remainder: Graph
    vmap: tuple[int, ...]  # remainder id -> original id


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


# ---------------------------------------------------------------------------
# the reducer


def _missing_pairs(adj: list[int], verts: list[int]) -> list[Edge]:
    out = []
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            a, b = verts[i], verts[j]
            if not adj[a] >> b & 1:
                out.append((a, b))
    return out


def reduce_tw3(g: Graph) -> ReductionTrace | Reject:
    """Reduce ``g`` to nothing (treewidth <= 3) or report the stuck core."""
    n = g.n
    adj = list(g.adj_masks)
    alive = (1 << n) - 1 if n else 0
    apps: list[RuleApp] = []

    while alive:
        app = _best_rule(adj, alive)
        if app is None:
            keep = _bits(alive)
            back = {v: i for i, v in enumerate(keep)}
            edges = [
                (back[v], back[w])
                for v in keep
                for w in _bits(adj[v] & alive)
                if v < w
            ]
            return Reject(
                "no reduction rule applies",
                Graph.build(len(keep), edges),
                tuple(keep),
            )
        for a, b in app.fill:
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        for v in app.removed:
            alive &= ~(1 << v)
        apps.append(app)
    return ReductionTrace(tuple(apps))


def _best_rule(adj: list[int], alive: int) -> RuleApp | None:
    tier1: RuleApp | None = None
    deg3: dict[int, list[int]] = {}
    for v in _bits(alive):
        nb = adj[v] & alive
        d = nb.bit_count()
        if d == 0:
            return RuleApp("islet", (v,), (), ())
        if d == 1:
            return RuleApp("twig", (v,), tuple(_bits(nb)), ())
        if d == 2:
            a, b = _bits(nb)
            if adj[a] >> b & 1:
                return RuleApp("series", (v,), (a, b), ())
            if tier1 is None:
                tier1 = RuleApp("series", (v,), (a, b), ((a, b),))
        elif d == 3:
            trio = _bits(nb)
            missing = _missing_pairs(adj, trio)
            if not missing:
                return RuleApp("triangle", (v,), tuple(trio), ())
            if len(missing) < 3 and tier1 is None:
                tier1 = RuleApp("triangle", (v,), tuple(trio), tuple(missing))
            deg3.setdefault(nb, []).append(v)

    if tier1 is not None:
        return tier1

    # buddy: two degree-3 vertices with one shared neighborhood
    best_pair: tuple[int, int] | None = None
    best_nb = 0
    for nb, vs in deg3.items():
        if len(vs) >= 2:
            pair = (vs[0], vs[1])
            if best_pair is None or pair < best_pair:
                best_pair, best_nb = pair, nb
    if best_pair is not None:
        trio = _bits(best_nb)
        return RuleApp(
            "buddy",
            best_pair,
            tuple(trio),
            tuple(_missing_pairs(adj, trio)),
        )

    # cube: degree-3 center, degree-3 independent neighbors, outer
    # neighborhoods pairing into three shared vertices
    centers = sorted(v for vs in deg3.values() for v in vs)
    for v in centers:
        nb = adj[v] & alive
        v1, v2, v3 = _bits(nb)
        if any((adj[u] & alive).bit_count() != 3 for u in (v1, v2, v3)):
            continue
        if adj[v1] >> v2 & 1 or adj[v1] >> v3 & 1 or adj[v2] >> v3 & 1:
            continue
        w1 = (adj[v1] & alive) & ~(1 << v)
        w2 = (adj[v2] & alive) & ~(1 << v)
        w3 = (adj[v3] & alive) & ~(1 << v)
        m12, m13, m23 = w1 & w2, w1 & w3, w2 & w3
        union = w1 | w2 | w3
        if (
            m12.bit_count() != 1
            or m13.bit_count() != 1
            or m23.bit_count() != 1
            or union.bit_count() != 3
            or (m12 | m13 | m23) != union
        ):
            continue
        w12 = m12.bit_length() - 1
        w13 = m13.bit_length() - 1
        w23 = m23.bit_length() - 1
        trio = [w12, w13, w23]
        return RuleApp(
            "cube",
            (v, v1, v2, v3),
            (w12, w13, w23),
            tuple(_missing_pairs(adj, sorted(set(trio)))),
        )
    return None


# ---------------------------------------------------------------------------
# completion to a spanning 3-tree


@dataclass(frozen=True)
class FillCompletion:
    three_tree: Graph
    fill: tuple[Edge, ...]
    pes: Pes


def three_tree_completion(g: Graph) -> FillCompletion:
    """A spanning 3-tree supergraph of ``g`` with fill and elimination
    scheme, built by replaying an accepting reduction backwards.

    Raises TooSmall below 3 vertices and TreewidthExceeded when the
    reduction rejects.
    """
    if g.n < 3:
        raise TooSmall(f"completion needs n >= 3, got {g.n}")
    verdict = reduce_tw3(g)
    if isinstance(verdict, Reject):
        raise TreewidthExceeded(
            f"treewidth exceeds 3: {verdict.reason} "
            f"on {verdict.remainder.n} stuck vertices"
        )
    if g.n == 3:
        h = Graph.build(3, [(0, 1), (0, 2), (1, 2)])
        fill = tuple(sorted(h.edges - g.edges))
        return FillCompletion(h, fill, Pes((0, 1, 2)))

    # replay backwards: each bag introduces exactly one vertex
    bags: list[set[int]] = []
    parent: list[int] = []
    intro: list[int] = []

    def attach(vertex: int, support: set[int]) -> None:
        bags.append({vertex} | support)
        parent.append(_find_bag(bags, support))
        intro.append(vertex)

    for app in reversed(verdict.apps):
        if app.rule in ("islet", "twig", "series", "triangle"):
            attach(app.removed[0], set(app.support))
        elif app.rule == "buddy":
            attach(app.removed[0], set(app.support))
            attach(app.removed[1], set(app.support))
        else:  # cube
            v, v1, v2, v3 = app.removed
            w12, w13, w23 = app.support
            attach(v, {w12, w13, w23})
            d1 = len(bags) - 1
            for vi, pair in ((v1, {w12, w13}), (v2, {w12, w23}), (v3, {w13, w23})):
                bags.append({vi, v} | pair)
                parent.append(d1)
                intro.append(vi)

    # collapse the first four bags into the root 4-clique
    root = set().union(*bags[:4])
    assert len(root) == 4
    new_bags: list[set[int]] = [root]
    new_parent: list[int] = [-1]
    new_intro: list[int] = [-1]
    for j in range(4, len(bags)):
        new_bags.append(bags[j])
        new_parent.append(max(parent[j] - 3, 0))
        new_intro.append(intro[j])

    # pad every bag to four vertices using its parent's members
    padded: list[set[int]] = [root]
    for j in range(1, len(new_bags)):
        v = new_intro[j]
        support = new_bags[j] - {v}
        pool = sorted(padded[new_parent[j]] - support - {v})
        while len(support) < 3:
            support.add(pool.pop(0))
        padded.append({v} | support)

    order = tuple(sorted(root)) + tuple(new_intro[1:])
    edges: set[Edge] = set()
    for bag in padded:
        bs = sorted(bag)
        for i in range(len(bs)):
            for j in range(i + 1, len(bs)):
                edges.add((bs[i], bs[j]))
    h = Graph(g.n, frozenset(edges))
    assert h.m == 3 * g.n - 6
    assert g.edges <= h.edges
    pes = Pes(order)
    assert verify_pes(h, pes, strict=True)
    fill = tuple(sorted(h.edges - g.edges))
    return FillCompletion(h, fill, pes)


def _find_bag(bags: list[set[int]], support: set[int]) -> int:
    for i, bag in enumerate(bags):
        if support <= bag:
            return i
    if not bags:
        return -1
    raise AssertionError(f"no bag contains {sorted(support)}")


# ---------------------------------------------------------------------------
# exact treewidth (small n)


def treewidth_oracle(g: Graph) -> int:
    """Exact treewidth by subset dynamic programming; n <= 18 only."""
    n = g.n
    if n > 18:
        raise TooLarge(f"oracle limited to 18 vertices, got {n}")
    if n == 0:
        return -1
    adj = g.adj_masks
    full = (1 << n) - 1
    f = [0] * (full + 1)
    f[0] = -1
    for s in range(1, full + 1):
        best = n
        rest = s
        while rest:
            b = rest & -rest
            rest ^= b
            v = b.bit_length() - 1
            t = s ^ b
            prev = f[t]
            if prev >= best:
                continue
            q = _reach_degree(adj, t, v)
            cost = prev if prev > q else q
            if cost < best:
                best = cost
        f[s] = best
    return f[full]


def treewidth_le3_oracle(g: Graph) -> bool:
    """Decide treewidth <= 3 by the same subset dynamic program.

    Independent of the reduction rules.  Boolean specialization of
    ``treewidth_oracle`` with early exits, so sweeps over many small graphs
    stay cheap; the two agree by construction and are cross-checked in tests.
    """
    n = g.n
    if n > 18:
        raise TooLarge(f"oracle limited to 18 vertices, got {n}")
    if n <= 4:
        return True
    adj = g.adj_masks
    if len(g.edges) > 3 * n - 6:
        return False
    full = (1 << n) - 1
    # nbr[m] = union of neighborhoods over the vertices in m
    nbr = [0] * (full + 1)
    for m in range(1, full + 1):
        nbr[m] = nbr[m & (m - 1)] | adj[(m & -m).bit_length() - 1]
    ok = bytearray(full + 1)
    ok[0] = 1
    for s in range(1, full + 1):
        rest = s
        while rest:
            b = rest & -rest
            rest ^= b
            t = s ^ b
            if not ok[t]:
                continue
            # direct neighbors outside s lower-bound the fill degree
            if (nbr[b] & ~s).bit_count() > 3:
                continue
            comp = b
            while True:
                grow = nbr[comp] & t & ~comp
                if not grow:
                    break
                comp |= grow
            if (nbr[comp] & ~t & ~b).bit_count() <= 3:
                ok[s] = 1
                break
    return bool(ok[full])


def _reach_degree(adj: list[int], through: int, v: int) -> int:
    """Count vertices outside ``through`` + v reached from v via ``through``."""
    comp = 1 << v
    while True:
        nb = 0
        m = comp
        while m:
            b = m & -m
            m ^= b
            nb |= adj[b.bit_length() - 1]
        grow = nb & through & ~comp
        if not grow:
            return (nb & ~through & ~comp & ~(1 << v)).bit_count()
        comp |= grow


def brute_treewidth(g: Graph) -> int:
    """Reference: try every elimination order (tiny n only)."""
    from itertools import permutations

    n = g.n
    if n == 0:
        return -1
    best = n - 1
    for order in permutations(range(n)):
        adj = list(g.adj_masks)
        alive = (1 << n) - 1
        width = 0
        for v in order:
            nb = adj[v] & alive
            width = max(width, nb.bit_count())
            if width >= best:
                break
            for a in _bits(nb):
                adj[a] |= nb & ~(1 << a)
            alive &= ~(1 << v)
        best = min(best, width)
    return best
