"""Acceptance gate: seven criteria, one printed verdict line each.

Each test drives a pinned workload and prints a single PASS/FAIL line
even under pytest's output capture, so a logged run shows the verdicts.
"""
from __future__ import annotations

import random
import time
from contextlib import contextmanager

import pytest

from stacktri.completer import case_counts, complete
from stacktri.embed import embed_planar
from stacktri.errors import NonplanarError
from stacktri.formats import serialize_plane
from stacktri.gen import enum_graphs, gen_plane_3tree, subsample_plane
from stacktri.graph import Graph, norm_edge
from stacktri.ktree import verify_pes
from stacktri.plane import extends
from stacktri.render import audit_crossings, render_svg, tutte_layout
from stacktri.tw3 import (
    Reject,
    reduce_tw3,
    treewidth_le3_oracle,
    treewidth_oracle,
)


def _say(capsys, line: str) -> None:
    with capsys.disabled():
        print(line, flush=True)


@contextmanager
def _verdict(capsys, num: int, label: str):
    t0 = time.perf_counter()
    info: dict[str, str] = {}
    try:
        yield info
    except BaseException:
        _say(capsys, f"criterion {num} ({label}): FAIL")
        raise
    dt = time.perf_counter() - t0
    _say(capsys, f"criterion {num} ({label}): PASS in {dt:.1f}s{info.get('note', '')}")


def _assert_completion(inp, done) -> None:
    """The full witness bundle: spanning, size, faces, scheme, extension."""
    n = inp.graph.n
    out = done.output
    assert out.graph.n == n
    assert inp.graph.edges <= out.graph.edges
    assert out.graph.m == 3 * n - 6
    assert not out.fused and not out.hosts
    assert len(out.walks) == 2 * n - 4
    assert all(len(w) == 3 for w in out.walks)
    assert verify_pes(out.graph, done.pes, strict=True)
    assert extends(out, inp, done.added)


def test_criterion_1_complete_random_thinned(capsys):
    with _verdict(capsys, 1, "500 thinned instances, n 3..100") as info:
        t0 = time.perf_counter()
        for i in range(500):
            n = 3 + i % 98
            keep = (0.3, 0.6, 0.9)[i % 3]
            base, _ = gen_plane_3tree(n, i, check=False)
            thin, _ = subsample_plane(base, keep, i + 1000, check=False)
            _assert_completion(thin, complete(thin, check=False))
        dt = time.perf_counter() - t0
        assert dt < 60.0, f"sweep took {dt:.1f}s, budget is 60s"
        info["note"] = ""


def test_criterion_2_exhaustive_seven_vertices(capsys):
    with _verdict(capsys, 2, "all 2^21 graphs on 7 vertices") as info:
        t0 = time.perf_counter()
        # tie the boolean oracle to the exact one before leaning on it:
        # exhaustively to n = 5, then on a 2000-graph sample at n = 7
        for n in range(1, 6):
            for g in enum_graphs(n):
                assert treewidth_le3_oracle(g) == (treewidth_oracle(g) <= 3)
        rng = random.Random(20260822)
        pairs = [(u, v) for u in range(7) for v in range(u + 1, 7)]
        for mask in rng.sample(range(1 << 21), 2000):
            g = Graph(7, frozenset(pairs[i] for i in range(21) if mask >> i & 1))
            assert treewidth_le3_oracle(g) == (treewidth_oracle(g) <= 3)

        completed = 0
        for mask, g in enumerate(enum_graphs(7)):
            accept = not isinstance(reduce_tw3(g), Reject)
            assert accept == treewidth_le3_oracle(g), f"verdict mismatch, mask {mask}"
            if accept:
                try:
                    p = embed_planar(g, check=False)
                except NonplanarError:
                    continue
                done = complete(p, check=False)
                _assert_completion(p, done)
                completed += 1
            if (mask + 1) % (1 << 18) == 0:
                _say(
                    capsys,
                    f"  criterion 2: {mask + 1}/{1 << 21} masks, "
                    f"{completed} completed, {time.perf_counter() - t0:.0f}s",
                )
        dt = time.perf_counter() - t0
        assert dt < 3600.0, f"sweep took {dt / 60:.1f} min, budget is one hour"
        info["note"] = f", {completed} drawings completed"


def test_criterion_3_idempotent_on_triangulations(capsys):
    with _verdict(capsys, 3, "100 stacked triangulations, n 3..200"):
        for i in range(100):
            n = 3 + (i * 197) // 99
            p, _ = gen_plane_3tree(n, 4000 + i, check=False)
            done = complete(p)
            assert done.added == ()
            assert serialize_plane(done.output) == serialize_plane(p)


def test_criterion_4_negative_controls(capsys):
    with _verdict(capsys, 4, "rejections and the cube rule"):
        octa = Graph.build(
            6,
            [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (4, 1),
             (5, 1), (5, 2), (5, 3), (5, 4)],
        )
        prism5 = Graph.build(
            10,
            [(i, (i + 1) % 5) for i in range(5)]
            + [(i + 5, (i + 1) % 5 + 5) for i in range(5)]
            + [(i, i + 5) for i in range(5)],
        )
        for g in (octa, prism5):
            assert isinstance(reduce_tw3(g), Reject)
            assert treewidth_oracle(g) == 4
        k5 = Graph.build(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])
        k33 = Graph.build(6, [(u, v + 3) for u in range(3) for v in range(3)])
        for g in (k5, k33):
            with pytest.raises(NonplanarError):
                embed_planar(g)
        cube = Graph.build(
            8,
            [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4),
             (0, 4), (1, 5), (2, 6), (3, 7)],
        )
        trace = reduce_tw3(cube)
        assert not isinstance(trace, Reject)
        assert any(app.rule == "cube" for app in trace.apps)


def test_criterion_5_case_coverage_and_exemplars(capsys):
    with _verdict(capsys, 5, "handler coverage and exemplars") as info:
        # a fixed batch that alone pushes every handler past the bar; in a
        # full run the earlier criteria have already piled onto the counters
        for i in range(80):
            n = 8 + (i % 5) * 9
            keep = (0.25, 0.5, 0.75, 0.92)[i % 4]
            p, _ = gen_plane_3tree(n, 9000 + i, check=False)
            q, _ = subsample_plane(p, keep, 9500 + i, check=False)
            complete(q, check=False)
        low = {k: v for k, v in case_counts.items() if v < 50}
        assert not low, f"handlers fired fewer than 50 times: {low}"

        # two disjoint triangles: six connectors in a 3/2/1 staircase
        tri2 = embed_planar(
            Graph.build(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        )
        done = complete(tri2)
        _assert_completion(tri2, done)
        assert len(done.added) == 6
        left = {0, 1, 2}
        assert all((u in left) != (v in left) for u, v in done.added)
        for side in (left, {3, 4, 5}):
            degs = sorted(sum(v in e for e in done.added) for v in side)
            assert degs == [1, 2, 3]

        # bowtie: three connectors between the non-shared pairs, 2/1 split
        bow = embed_planar(
            Graph.build(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
        )
        done = complete(bow)
        _assert_completion(bow, done)
        assert len(done.added) == 3
        assert set(done.added) <= {(0, 3), (0, 4), (1, 3), (1, 4)}
        for side in ((0, 1), (3, 4)):
            degs = sorted(sum(v in e for e in done.added) for v in side)
            assert degs == [1, 2]

        # K4 minus an edge: exactly the missing pair comes back
        k4e = embed_planar(
            Graph.build(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
        )
        done = complete(k4e)
        _assert_completion(k4e, done)
        assert done.added == ((0, 3),)
        info["note"] = ", counts " + str(dict(sorted(case_counts.items())))


def _outer_rim(p) -> set[int]:
    return {d[0] for d in p.walks[p._walk_index[p.outer]]}


def test_criterion_6_anchored_runs(capsys):
    with _verdict(capsys, 6, "100 anchored completions"):
        for i in range(100):
            n = 4 + (i % 57)
            keep = (0.6, 0.9)[i % 2]
            base, _ = gen_plane_3tree(n, 7000 + i, check=False)
            q, _ = subsample_plane(base, keep, 7100 + i, check=False)
            if i % 2 == 0 or q.graph.m == 0:
                if q.outer is None:
                    av = 0
                else:
                    av = min(_outer_rim(q))
                done = complete(q, anchor_vertex=av)
                assert av in _outer_rim(done.output)
            else:
                ae = norm_edge(*q.walks[q._walk_index[q.outer]][0])
                done = complete(q, anchor_edge=ae)
                rim = _outer_rim(done.output)
                assert ae[0] in rim and ae[1] in rim
            _assert_completion(q, done)


def test_criterion_7_crossing_free_renders(capsys):
    with _verdict(capsys, 7, "layout audit at 1e-9") as info:
        audited = 0
        for i in range(40):
            n = 4 + (i % 20) * 4
            keep = (0.5, 0.8, 1.0)[i % 3]
            p, _ = gen_plane_3tree(n, 8200 + i, check=False)
            if keep < 1.0:
                p, _ = subsample_plane(p, keep, 8300 + i, check=False)
            done = complete(p, check=False)
            pos = tutte_layout(done.output)
            assert not audit_crossings(pos, done.output.graph.edges, tol=1e-9)
            if i % 10 == 0:
                svg = render_svg(done.output, highlight=set(done.added))
                assert svg.count("<line") == done.output.graph.m
            audited += 1
        info["note"] = f", {audited} drawings audited"
