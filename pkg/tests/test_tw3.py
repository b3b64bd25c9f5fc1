from __future__ import annotations

import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from stacktri.errors import TooLarge, TooSmall, TreewidthExceeded
from stacktri.graph import Graph
from stacktri.ktree import verify_pes
from stacktri.tw3 import (
    treewidth_le3_oracle,
    Reject,
    ReductionTrace,
    brute_treewidth,
    reduce_tw3,
    three_tree_completion,
    treewidth_oracle,
)

from test_plane import random_stacked
from test_embed import k33, k5, octahedron


def q3() -> Graph:
    edges = []
    for a in range(8):
        for bit in (1, 2, 4):
            b = a ^ bit
            if a < b:
                edges.append((a, b))
    return Graph.build(8, edges)


def pentagonal_prism() -> Graph:
    ring = [(i, (i + 1) % 5) for i in range(5)]
    return Graph.build(
        10,
        ring
        + [(5 + a, 5 + b) for a, b in ring]
        + [(i, i + 5) for i in range(5)],
    )


def wagner_v8() -> Graph:
    return Graph.build(
        8, [(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)]
    )


# ---------------------------------------------------------------------------
# reducer verdicts


def test_accepts_small_shapes():
    for g in (
        Graph.build(0, []),
        Graph.build(1, []),
        Graph.build(5, [(0, 1), (1, 2), (2, 3), (3, 4)]),  # path
        Graph.build(6, [(i, (i + 1) % 6) for i in range(6)]),  # cycle
        Graph.build(4, combinations(range(4), 2)),  # K4
        k33(),  # nonplanar but treewidth 3
    ):
        assert isinstance(reduce_tw3(g), ReductionTrace)


def test_rejects_known_width4():
    for g in (k5(), octahedron(), pentagonal_prism(), wagner_v8()):
        verdict = reduce_tw3(g)
        assert isinstance(verdict, Reject)
        assert verdict.remainder.n >= 4


def test_reject_carries_stuck_core():
    verdict = reduce_tw3(k5())
    assert isinstance(verdict, Reject)
    assert verdict.remainder.n == 5
    assert verdict.vmap == (0, 1, 2, 3, 4)


def test_q3_uses_cube_rule():
    verdict = reduce_tw3(q3())
    assert isinstance(verdict, ReductionTrace)
    assert verdict.apps[0].rule == "cube"
    assert verdict.apps[0].removed == (0, 1, 2, 4)
    assert verdict.apps[0].support == (3, 5, 6)


def test_k33_uses_buddy_rule():
    verdict = reduce_tw3(k33())
    assert isinstance(verdict, ReductionTrace)
    assert verdict.apps[0].rule == "buddy"
    assert verdict.apps[0].removed == (0, 1)
    assert verdict.apps[0].fill == ((3, 4), (3, 5), (4, 5))


def test_three_trees_reduce_with_zero_fill():
    for n, seed in ((4, 0), (12, 1), (60, 2)):
        g = random_stacked(n, seed).graph
        verdict = reduce_tw3(g)
        assert isinstance(verdict, ReductionTrace)
        assert verdict.fill_edges() == []


def test_reduction_is_deterministic():
    g = k33()
    assert reduce_tw3(g) == reduce_tw3(g)


# ---------------------------------------------------------------------------
# exact oracles


def test_oracle_small_cases():
    assert treewidth_oracle(Graph.build(0, [])) == -1
    assert treewidth_oracle(Graph.build(1, [])) == 0
    assert treewidth_oracle(Graph.build(2, [(0, 1)])) == 1
    assert treewidth_oracle(Graph.build(3, [(0, 1), (1, 2), (2, 0)])) == 2
    assert treewidth_oracle(k5()) == 4
    assert treewidth_oracle(octahedron()) == 4
    assert treewidth_oracle(k33()) == 3
    assert treewidth_oracle(q3()) == 3
    assert treewidth_oracle(pentagonal_prism()) == 4
    assert treewidth_oracle(wagner_v8()) == 4


def test_oracle_guard():
    with pytest.raises(TooLarge):
        treewidth_oracle(Graph.build(19, []))


def test_oracle_matches_brute_force_n4():
    pairs = list(combinations(range(4), 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        g = Graph.build(4, edges)
        assert treewidth_oracle(g) == brute_treewidth(g)


def test_oracle_matches_brute_force_n5_sample():
    rng = random.Random(7)
    pairs = list(combinations(range(5), 2))
    for _ in range(120):
        edges = [e for e in pairs if rng.random() < 0.5]
        g = Graph.build(5, edges)
        assert treewidth_oracle(g) == brute_treewidth(g)


def test_reduce_matches_oracle_all_n5():
    pairs = list(combinations(range(5), 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        g = Graph.build(5, edges)
        accept = isinstance(reduce_tw3(g), ReductionTrace)
        small = treewidth_oracle(g) <= 3
        assert accept == small
        assert treewidth_le3_oracle(g) == small


def test_reduce_matches_oracle_all_n6():
    pairs = list(combinations(range(6), 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        g = Graph.build(6, edges)
        accept = isinstance(reduce_tw3(g), ReductionTrace)
        small = treewidth_oracle(g) <= 3
        assert accept == small, edges
        assert treewidth_le3_oracle(g) == small, edges


# ---------------------------------------------------------------------------
# completion


def test_completion_too_small():
    with pytest.raises(TooSmall):
        three_tree_completion(Graph.build(2, [(0, 1)]))


def test_completion_rejects_width4():
    with pytest.raises(TreewidthExceeded):
        three_tree_completion(octahedron())


def test_completion_triangle_base_case():
    g = Graph.build(3, [(0, 1)])
    comp = three_tree_completion(g)
    assert comp.three_tree.m == 3
    assert comp.fill == ((0, 2), (1, 2))


def test_completion_of_three_tree_is_identity():
    for n, seed in ((4, 3), (15, 4), (40, 5)):
        g = random_stacked(n, seed).graph
        comp = three_tree_completion(g)
        assert comp.fill == ()
        assert comp.three_tree == g
        assert verify_pes(g, comp.pes)


def test_completion_q3():
    comp = three_tree_completion(q3())
    h = comp.three_tree
    assert h.m == 18
    assert q3().edges <= h.edges
    assert len(comp.fill) == 6
    assert verify_pes(h, comp.pes)


def test_completion_k33():
    comp = three_tree_completion(k33())
    assert k33().edges <= comp.three_tree.edges
    assert verify_pes(comp.three_tree, comp.pes)


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 40), st.integers(0, 10_000), st.integers(0, 10_000))
def test_completion_of_subsampled_three_trees(n, seed, sub_seed):
    g = random_stacked(n, seed).graph
    rng = random.Random(sub_seed)
    kept = [e for e in sorted(g.edges) if rng.random() < 0.6]
    sub = Graph.build(n, kept)
    comp = three_tree_completion(sub)
    h = comp.three_tree
    assert h.m == 3 * n - 6
    assert sub.edges <= h.edges
    assert verify_pes(h, comp.pes)
    assert frozenset(comp.fill) == h.edges - sub.edges


def test_completion_disconnected():
    g = Graph.build(7, [(0, 1), (1, 2), (4, 5)])
    comp = three_tree_completion(g)
    assert comp.three_tree.is_connected()
    assert verify_pes(comp.three_tree, comp.pes)
