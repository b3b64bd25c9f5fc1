"""Straight-line SVG drawings of plane triangulations.

Interior vertices are placed at the average of their neighbors with the
outer triangle pinned to an equilateral frame.  For a triangulation
(connected, every face a triangle) the graph is 3-connected once n > 3,
so this barycentric system is nonsingular and its solution is a planar
straight-line drawing realizing the stored rotation system.  The audit
in :func:`audit_crossings` checks that claim numerically instead of
trusting it.
"""

from __future__ import annotations

import numpy as np

from .errors import NotTriangulation
from .graph import Edge, norm_edge
from .plane import PlaneGraph

_RESIDUAL_BOUND = 1e-10


def _outer_triangle(p: PlaneGraph) -> tuple[int, int, int]:
    """Outer walk vertices of a triangulation, in walk (clockwise) order."""
    if p.fused or p.hosts or not p.graph.is_connected():
        raise NotTriangulation("drawing is not a connected triangulation")
    if any(len(w) != 3 for w in p.walks):
        raise NotTriangulation("a face is not a triangle")
    if p.outer is None:
        raise NotTriangulation("no outer face designated")
    walk = p.walks[p._walk_index[p.outer]]
    return walk[0][0], walk[1][0], walk[2][0]


def tutte_layout(p: PlaneGraph) -> np.ndarray:
    """Coordinates for a plane triangulation, one (x, y) row per vertex.

    The outer face sits on an equilateral triangle inscribed in the unit
    circle; every interior vertex lands at the barycenter of its
    neighbors.  The linear system is solved to residual below 1e-10.
    """
    a, b, c = _outer_triangle(p)
    n = p.graph.n
    pos = np.zeros((n, 2))
    # outer walk runs clockwise, so descending angles keep rotations CCW
    for v, ang in zip((a, b, c), (90.0, -30.0, 210.0)):
        pos[v] = (np.cos(np.radians(ang)), np.sin(np.radians(ang)))
    inner = [v for v in range(n) if v not in (a, b, c)]
    if not inner:
        return pos
    idx = {v: i for i, v in enumerate(inner)}
    k = len(inner)
    lap = np.zeros((k, k))
    rhs = np.zeros((k, 2))
    for v in inner:
        i = idx[v]
        lap[i, i] = len(p.graph.adj[v])
        for w in p.graph.adj[v]:
            if w in idx:
                lap[i, idx[w]] -= 1.0
            else:
                rhs[i] += pos[w]
    sol = np.linalg.solve(lap, rhs)
    residual = np.abs(lap @ sol - rhs).max()
    if residual >= _RESIDUAL_BOUND:
        raise ArithmeticError(f"layout residual {residual:.3e} too large")
    for v in inner:
        pos[v] = sol[idx[v]]
    return pos


def audit_crossings(
    pos: np.ndarray,
    edges: frozenset[Edge] | set[Edge],
    *,
    tol: float = 1e-9,
) -> list[tuple[Edge, Edge]]:
    """All pairs of segments that provably cross.

    Coordinates are normalized to a unit bounding box first, so ``tol``
    is scale free.  A pair is reported only when each segment strictly
    straddles the other's supporting line with orientation margin above
    ``tol``: a certain transversal crossing.  Touches inside the
    tolerance band are not flagged, because barycentric layouts of
    deeply stacked drawings legitimately run vertices exponentially
    close together and exact tangency cannot be told apart from them at
    working precision.  Segments sharing an endpoint score an exact zero
    there and are never reported.  An empty result certifies that no two
    edges of the drawing cross.
    """
    pts = np.asarray(pos, dtype=float)
    span = float(np.ptp(pts, axis=0).max()) if len(pts) else 0.0
    if span > 0:
        pts = pts / span

    def orient(px, py, qx, qy, rx, ry):
        return (qx - px) * (ry - py) - (qy - py) * (rx - px)

    bad: list[tuple[Edge, Edge]] = []
    es = sorted(edges)
    for i, e in enumerate(es):
        ax, ay = pts[e[0]]
        bx, by = pts[e[1]]
        for f in es[i + 1 :]:
            cx, cy = pts[f[0]]
            dx, dy = pts[f[1]]
            d1 = orient(cx, cy, dx, dy, ax, ay)
            d2 = orient(cx, cy, dx, dy, bx, by)
            if not ((d1 > tol and d2 < -tol) or (d1 < -tol and d2 > tol)):
                continue
            d3 = orient(ax, ay, bx, by, cx, cy)
            d4 = orient(ax, ay, bx, by, dx, dy)
            if (d3 > tol and d4 < -tol) or (d3 < -tol and d4 > tol):
                bad.append((e, f))
    return bad


def render_svg(
    p: PlaneGraph,
    highlight: frozenset[Edge] | set[Edge] = frozenset(),
    *,
    size: int = 640,
) -> str:
    """SVG 1.1 document of a plane triangulation.

    Edges in ``highlight`` (normalized pairs) are drawn dashed, the rest
    solid; vertices are labeled when there are at most 40 of them.
    """
    pos = tutte_layout(p)
    hi = {norm_edge(u, v) for u, v in highlight}
    rogue = hi - set(p.graph.edges)
    if rogue:
        raise NotTriangulation(f"highlight edges not in graph: {sorted(rogue)}")
    margin = 0.12
    scale = size / (2.0 + 2.0 * margin)

    def at(v: int) -> tuple[float, float]:
        # flip y so the mathematical orientation survives the SVG axis
        x = (pos[v, 0] + 1.0 + margin) * scale
        y = (1.0 + margin - pos[v, 1]) * scale
        return x, y

    solid, dashed = [], []
    for e in sorted(p.graph.edges):
        (x1, y1), (x2, y2) = at(e[0]), at(e[1])
        line = (
            f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}"/>'
        )
        (dashed if e in hi else solid).append(line)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="#ffffff"/>',
        '<g stroke="#20242c" stroke-width="1.6" stroke-linecap="round">',
        *solid,
        "</g>",
        '<g stroke="#c03028" stroke-width="1.6" stroke-linecap="round" '
        'stroke-dasharray="7 5">',
        *dashed,
        "</g>",
    ]
    show_labels = p.graph.n <= 40
    for v in range(p.graph.n):
        x, y = at(v)
        parts.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3.2" fill="#20242c"/>')
        if show_labels:
            parts.append(
                f'<text x="{x + 5:.2f}" y="{y - 5:.2f}" '
                f'font-family="monospace" font-size="12">{v}</text>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
