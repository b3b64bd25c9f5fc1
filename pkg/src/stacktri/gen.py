"""Seeded instance generators and exhaustive small-graph enumeration.

All randomness flows through a hand-rolled SplitMix64 stream so that the
same seed yields the same drawing on every platform and Python build.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterator

from .errors import TooLarge, TooSmall
from .graph import Edge, Graph
from .ktree import Pes, verify_pes
from .plane import (
    Dart,
    PlaneGraph,
    delete_edges_plane,
    stack_vertex,
    triangle_plane,
)

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """Deterministic 64-bit generator; identical output everywhere."""

    __slots__ = ("state",)

    def __init__(self, seed: int) -> None:
        self.state = seed & _MASK64

    def next64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def float53(self) -> float:
        """Uniform in [0, 1) with 53 random bits."""
        return (self.next64() >> 11) * 2.0**-53

    def randrange(self, k: int) -> int:
        """Uniform in [0, k); rejection sampling keeps it exactly uniform."""
        if k <= 0:
            raise ValueError(f"randrange needs k >= 1, got {k}")
        lim = (1 << 64) - ((1 << 64) % k)
        while True:
            x = self.next64()
            if x < lim:
                return x % k


def gen_plane_3tree(
    n: int, seed: int, *, check: bool = True
) -> tuple[PlaneGraph, Pes]:
    """Grow a random stacked triangulation on n vertices.

    Starts from the canonical triangle and repeatedly subdivides a
    uniformly chosen bounded face, so vertex ids 0..n-1 read off a
    perfect elimination scheme in reverse.
    """
    if n < 3:
        raise TooSmall(f"need n >= 3, got {n}")
    rng = SplitMix64(seed)
    p = triangle_plane()
    faces: list[Dart] = [f.id for f in p.faces if f.id != p.outer]
    for _ in range(n - 3):
        idx = rng.randrange(len(faces))
        fid = faces[idx]
        (walk,) = p.face(fid).walks
        p, vnew = stack_vertex(p, fid, check=False)
        children = [
            min((a, b), (b, vnew), (vnew, a)) for a, b in walk
        ]
        faces[idx] = children[0]
        faces.extend(children[1:])
    pes = Pes(tuple(range(n)))
    if check:
        p.validate()
        assert verify_pes(p.graph, pes, strict=True)
    return p, pes


def subsample_plane(
    p: PlaneGraph, keep: float, seed: int, *, check: bool = True
) -> tuple[PlaneGraph, tuple[Edge, ...]]:
    """Keep each edge of a drawing independently with probability ``keep``.

    Edges are visited in sorted order so the dropped set depends only on
    (p, keep, seed).  Returns the thinned drawing and the dropped edges.
    """
    rng = SplitMix64(seed)
    dropped = tuple(
        e for e in sorted(p.graph.edges) if rng.float53() >= keep
    )
    q, _ = delete_edges_plane(p, dropped, check=check)
    return q, dropped


def enum_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on n vertices, in bitmask order over sorted pairs."""
    if n > 7:
        raise TooLarge(f"enumeration capped at 7 vertices, got {n}")
    pairs = list(combinations(range(n), 2))
    np = len(pairs)
    for mask in range(1 << np):
        edges = frozenset(
            pairs[i] for i in range(np) if mask >> i & 1
        )
        yield Graph(n, edges)
