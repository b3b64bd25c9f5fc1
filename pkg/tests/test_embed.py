from __future__ import annotations

import random
from itertools import combinations, permutations, product

import pytest
from hypothesis import given, settings, strategies as st

from stacktri.embed import biconnected_blocks, embed_planar, is_planar
from stacktri.errors import NonplanarError
from stacktri.graph import Graph
from stacktri.plane import trace_walks

from test_plane import random_stacked


# ---------------------------------------------------------------------------
# reference oracle: search all rotation systems for a sphere embedding


def planar_by_rotation_search(g: Graph) -> bool:
    if g.m == 0:
        return True
    target = 0
    for comp in g.components():
        m_i = sum(1 for u, v in g.edges if u in set(comp))
        if m_i:
            target += 2 - len(comp) + m_i
    choices = []
    for v in range(g.n):
        a = g.adj[v]
        if len(a) <= 2:
            choices.append([a])
        else:
            choices.append([(a[0],) + p for p in permutations(a[1:])])
    for combo in product(*choices):
        if len(trace_walks(combo)) == target:
            return True
    return False


def k5() -> Graph:
    return Graph.build(5, combinations(range(5), 2))

def k33() -> Graph:
    return Graph.build(6, [(a, b) for a in range(3) for b in range(3, 6)])

def octahedron() -> Graph:
    # K_2,2,2: all edges except the three diagonal pairs
    pairs = [(0, 3), (1, 4), (2, 5)]
    return Graph.build(
        6, [e for e in combinations(range(6), 2) if e not in pairs]
    )

def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.build(10, outer + spokes + inner)


# ---------------------------------------------------------------------------
# blocks


def test_blocks_bowtie():
    g = Graph.build(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
    blocks = sorted(sorted(b) for b in biconnected_blocks(g))
    assert blocks == [
        [(0, 1), (0, 2), (1, 2)],
        [(2, 3), (2, 4), (3, 4)],
    ]


def test_blocks_path_is_bridges():
    g = Graph.build(4, [(0, 1), (1, 2), (2, 3)])
    blocks = sorted(sorted(b) for b in biconnected_blocks(g))
    assert blocks == [[(0, 1)], [(1, 2)], [(2, 3)]]


# ---------------------------------------------------------------------------
# embedding known graphs


def test_embed_k4():
    g = Graph.build(4, combinations(range(4), 2))
    p = embed_planar(g)
    p.validate()
    assert len(p.faces) == 4


def test_embed_octahedron():
    p = embed_planar(octahedron())
    p.validate()
    assert len(p.faces) == 8


def test_embed_k5_minus_edge():
    g = k5().without_edges([(0, 1)])
    p = embed_planar(g)
    p.validate()
    assert len(p.faces) == 2 - 5 + 9


def test_embed_tree_and_cycle():
    tree = Graph.build(5, [(0, 1), (0, 2), (2, 3), (2, 4)])
    assert len(embed_planar(tree).faces) == 1
    cyc = Graph.build(5, [(i, (i + 1) % 5) for i in range(5)])
    assert len(embed_planar(cyc).faces) == 2


def test_embed_bowtie():
    g = Graph.build(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
    p = embed_planar(g)
    p.validate()
    assert len(p.faces) == 3


def test_embed_disconnected_with_isolated():
    g = Graph.build(8, [(0, 1), (1, 2), (2, 0), (4, 5), (5, 6), (6, 4)])
    p = embed_planar(g)
    p.validate()
    assert p.host_of(3) == p.outer
    assert p.host_of(7) == p.outer
    assert len(p.face(p.outer).walks) == 2


def test_embed_edgeless():
    g = Graph.build(3, [])
    p = embed_planar(g)
    assert p.outer is None
    assert p.faces[0].isolated == (0, 1, 2)


def test_nonplanar_rejected():
    for g in (k5(), k33(), petersen()):
        with pytest.raises(NonplanarError):
            embed_planar(g)
        assert not is_planar(g)


def test_k5_and_k33_oracle_agree():
    assert not planar_by_rotation_search(k5())
    assert not planar_by_rotation_search(k33())
    assert planar_by_rotation_search(octahedron())


# ---------------------------------------------------------------------------
# oracle sweeps


def test_all_graphs_up_to_5_match_oracle():
    pairs5 = list(combinations(range(5), 2))
    for mask in range(1 << len(pairs5)):
        edges = [pairs5[i] for i in range(len(pairs5)) if mask >> i & 1]
        g = Graph.build(5, edges)
        assert is_planar(g) == planar_by_rotation_search(g), edges
        if is_planar(g):
            embed_planar(g).validate()


def test_random_graphs_n6_n7_match_oracle():
    rng = random.Random(42)
    for n, rounds in ((6, 120), (7, 60)):
        pairs = list(combinations(range(n), 2))
        for _ in range(rounds):
            edges = [e for e in pairs if rng.random() < rng.choice((0.3, 0.5, 0.7))]
            g = Graph.build(n, edges)
            if max((g.degree(v) for v in range(n)), default=0) > 5:
                continue  # keep the rotation search affordable
            assert is_planar(g) == planar_by_rotation_search(g), edges
            if is_planar(g):
                embed_planar(g).validate()


@settings(max_examples=40, deadline=None)
@given(st.integers(4, 40), st.integers(0, 10_000), st.integers(0, 10_000))
def test_stacked_triangulations_reembed(n, seed, perm_seed):
    base = random_stacked(n, seed)
    perm = list(range(n))
    random.Random(perm_seed).shuffle(perm)
    g = Graph.build(n, [(perm[u], perm[v]) for u, v in base.graph.edges])
    p = embed_planar(g)
    p.validate()
    assert len(p.faces) == 2 * n - 4
