"""Read and write plane graphs as plain text.

The native format, ``planegraph v1``, is line oriented and fully
determines a drawing:

    planegraph v1
    n 5
    edge 0 1
    edge 0 4
    ...
    rot 0 1 4
    rot 1 2 0
    ...
    outer 0,1
    fuse 0,1 2,3
    host 4 0,1

``edge`` lines list the sorted vertex pairs in ascending order.  ``rot``
lines give the counterclockwise neighbor cycle of every vertex of
positive degree, rotated so the smallest neighbor comes first.  Face
walks follow from the cycles by the left-region rule: the successor of
dart (u, v) is (v, w) where w precedes u in the cycle at v.  ``outer``
names the unbounded face by one dart on it, or ``none`` for an edgeless
drawing.  ``fuse`` lines (usually absent) list the face ids of boundary
walks that bound one common face, which is how rings drawn inside a face
of another component are recorded; ``host`` lines place isolated
vertices in faces.  Tokens are separated by single spaces, darts are
written ``u,v``, and the file ends with a newline.

Serializing a canonical drawing is itself canonical: parsing the text
reproduces an equal :class:`PlaneGraph`, and serializing that reproduces
the text byte for byte.
"""

from __future__ import annotations

from .errors import FormatError
from .graph import Graph
from .plane import Dart, PlaneGraph


def _dart_token(d: Dart | None) -> str:
    return "none" if d is None else f"{d[0]},{d[1]}"


def serialize_plane(p: PlaneGraph) -> str:
    """Render ``p`` in planegraph v1 text form."""
    lines = ["planegraph v1", f"n {p.graph.n}"]
    for u, v in sorted(p.graph.edges):
        lines.append(f"edge {u} {v}")
    for v, cyc in enumerate(p.rotation):
        if cyc:
            lines.append("rot " + " ".join(str(x) for x in (v, *cyc)))
    lines.append(f"outer {_dart_token(p.outer)}")
    for cls in sorted(p.fused, key=sorted):
        lines.append("fuse " + " ".join(_dart_token(d) for d in sorted(cls)))
    for v, fid in p.hosts:
        lines.append(f"host {v} {_dart_token(fid)}")
    return "\n".join(lines) + "\n"


def _int(tok: str, ln: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"line {ln}: expected integer, got {tok!r}") from None


def _dart(tok: str, ln: int) -> Dart:
    u, _, v = tok.partition(",")
    if not v:
        raise FormatError(f"line {ln}: expected dart u,v, got {tok!r}")
    return _int(u, ln), _int(v, ln)


def parse_plane(text: str, *, check: bool = True) -> PlaneGraph:
    """Parse planegraph v1 text back into a drawing.

    Structural errors raise FormatError; rotation data that fails to
    describe a plane embedding raises the validation errors of
    PlaneGraph.build unless ``check`` is off.
    """
    lines = text.splitlines()

    def tokens(i: int) -> list[str]:
        if i >= len(lines):
            raise FormatError(f"line {i + 1}: unexpected end of file")
        return lines[i].split(" ")

    if tokens(0) != ["planegraph", "v1"]:
        raise FormatError("line 1: expected header 'planegraph v1'")
    head = tokens(1)
    if len(head) != 2 or head[0] != "n":
        raise FormatError("line 2: expected 'n <count>'")
    n = _int(head[1], 2)

    i = 2
    edges: list[tuple[int, int]] = []
    while i < len(lines) and lines[i].startswith("edge "):
        toks = tokens(i)
        if len(toks) != 3:
            raise FormatError(f"line {i + 1}: expected 'edge u v'")
        edges.append((_int(toks[1], i + 1), _int(toks[2], i + 1)))
        i += 1

    rotation: dict[int, tuple[int, ...]] = {}
    while i < len(lines) and lines[i].startswith("rot "):
        toks = tokens(i)
        if len(toks) < 3:
            raise FormatError(f"line {i + 1}: rotation cycle needs a neighbor")
        v = _int(toks[1], i + 1)
        if v in rotation:
            raise FormatError(f"line {i + 1}: duplicate rotation for {v}")
        rotation[v] = tuple(_int(t, i + 1) for t in toks[2:])
        i += 1

    toks = tokens(i)
    if toks[0] != "outer" or len(toks) != 2:
        raise FormatError(f"line {i + 1}: expected 'outer <dart|none>'")
    outer = None if toks[1] == "none" else _dart(toks[1], i + 1)
    i += 1

    fused: list[list[Dart]] = []
    while i < len(lines) and lines[i].startswith("fuse "):
        toks = tokens(i)
        if len(toks) < 3:
            raise FormatError(f"line {i + 1}: fuse class needs two faces")
        fused.append([_dart(t, i + 1) for t in toks[1:]])
        i += 1

    hosts: dict[int, Dart | None] = {}
    while i < len(lines) and lines[i].startswith("host "):
        toks = tokens(i)
        if len(toks) != 3:
            raise FormatError(f"line {i + 1}: expected 'host v <dart|none>'")
        v = _int(toks[1], i + 1)
        if v in hosts:
            raise FormatError(f"line {i + 1}: duplicate host for {v}")
        hosts[v] = None if toks[2] == "none" else _dart(toks[2], i + 1)
        i += 1

    if i != len(lines):
        raise FormatError(f"line {i + 1}: unrecognized line {lines[i]!r}")

    try:
        graph = Graph.build(n, edges)
    except Exception as exc:
        raise FormatError(f"bad edge list: {exc}") from exc
    return PlaneGraph.build(
        graph, rotation, fused=fused, hosts=hosts, outer=outer, check=check
    )


def parse_edge_list(text: str) -> Graph:
    """Parse a plain edge list: 'u v' per line, optional leading 'n <count>'.

    Blank lines and '#' comments are skipped.  Without an explicit count
    the vertex set is 0..max seen.
    """
    n_decl: int | None = None
    edges: list[tuple[int, int]] = []
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if len(parts) != 2 or n_decl is not None or edges:
                raise FormatError(f"line {ln}: misplaced vertex count")
            n_decl = _int(parts[1], ln)
            continue
        if len(parts) != 2:
            raise FormatError(f"line {ln}: expected 'u v'")
        edges.append((_int(parts[0], ln), _int(parts[1], ln)))
    if n_decl is not None:
        n = n_decl
    else:
        n = max((max(u, v) for u, v in edges), default=-1) + 1
    try:
        return Graph.build(n, edges)
    except Exception as exc:
        raise FormatError(f"bad edge list: {exc}") from exc
