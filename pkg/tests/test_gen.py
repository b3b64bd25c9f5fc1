"""Generator determinism and structural guarantees."""
from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stacktri.errors import TooLarge, TooSmall
from stacktri.gen import SplitMix64, enum_graphs, gen_plane_3tree, subsample_plane
from stacktri.graph import Graph
from stacktri.ktree import is_stacked_plane_3tree, verify_pes
from stacktri.plane import extends


def _splitmix_reference(seed: int, count: int) -> list[int]:
    # independent restatement of the stream, written against the published
    # constants rather than by importing the implementation under test
    out = []
    s = seed % 2**64
    for _ in range(count):
        s = (s + 0x9E3779B97F4A7C15) % 2**64
        z = s
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) % 2**64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) % 2**64
        out.append(z ^ (z >> 31))
    return out


def test_splitmix_matches_reference():
    for seed in (0, 1, 1234567, 2**64 - 1, -3):
        rng = SplitMix64(seed)
        assert [rng.next64() for _ in range(50)] == _splitmix_reference(seed, 50)


def test_splitmix_float53_range():
    rng = SplitMix64(99)
    xs = [rng.float53() for _ in range(2000)]
    assert all(0.0 <= x < 1.0 for x in xs)
    assert 0.4 < sum(xs) / len(xs) < 0.6


def test_randrange_uniform_and_bounds():
    rng = SplitMix64(7)
    counts = [0] * 5
    for _ in range(5000):
        counts[rng.randrange(5)] += 1
    assert all(800 < c < 1200 for c in counts)
    with pytest.raises(ValueError):
        rng.randrange(0)


def test_gen_3tree_structure():
    for n, seed in ((3, 0), (4, 1), (10, 2), (40, 3)):
        p, pes = gen_plane_3tree(n, seed)
        assert p.graph.n == n
        assert p.graph.m == 3 * n - 6
        faces = p.faces
        assert len(faces) == 2 * n - 4
        assert all(len(f.walks) == 1 and len(f.walks[0]) == 3 for f in faces)
        assert pes.order == tuple(range(n))
        assert verify_pes(p.graph, pes, strict=True)
        assert is_stacked_plane_3tree(p)


def test_gen_3tree_rejects_small():
    with pytest.raises(TooSmall):
        gen_plane_3tree(2, 0)


def test_gen_3tree_deterministic():
    a, _ = gen_plane_3tree(30, 12345)
    b, _ = gen_plane_3tree(30, 12345)
    c, _ = gen_plane_3tree(30, 54321)
    assert a == b
    assert a != c


def test_subsample_extends_and_determinism():
    p, _ = gen_plane_3tree(25, 8)
    q, dropped = subsample_plane(p, 0.5, 17)
    q2, dropped2 = subsample_plane(p, 0.5, 17)
    assert q == q2 and dropped == dropped2
    assert extends(p, q, dropped)
    assert set(dropped) | q.graph.edges == p.graph.edges
    assert not set(dropped) & q.graph.edges


def test_subsample_keep_extremes():
    p, _ = gen_plane_3tree(12, 4)
    full, dropped = subsample_plane(p, 1.0, 9)
    assert full == p and dropped == ()
    empty, gone = subsample_plane(p, 0.0, 9)
    assert empty.graph.m == 0
    assert len(gone) == p.graph.m
    assert len(empty.hosts) == p.graph.n


@settings(max_examples=30, deadline=None)
@given(
    n=st.integers(4, 30),
    seed=st.integers(0, 2**32),
    keep=st.floats(0.1, 0.95),
    seed2=st.integers(0, 2**32),
)
def test_subsample_valid_drawing(n, seed, keep, seed2):
    p, _ = gen_plane_3tree(n, seed)
    q, dropped = subsample_plane(p, keep, seed2)
    q.validate()
    assert extends(p, q, dropped)


def test_enum_counts_and_order():
    gs = list(enum_graphs(3))
    assert len(gs) == 8
    assert gs[0].m == 0
    assert gs[-1].edges == frozenset({(0, 1), (0, 2), (1, 2)})
    assert len(set(gs)) == 8
    assert len(list(enum_graphs(2))) == 2
    for g in gs:
        assert g == Graph.build(g.n, g.edges)


def test_enum_caps_size():
    with pytest.raises(TooLarge):
        next(enum_graphs(8))
