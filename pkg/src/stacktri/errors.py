"""Exception hierarchy for the stacktri toolkit.

Every rejection that a caller might want to branch on gets its own class;
all of them derive from StacktriError so scripts can catch one thing.
"""

from __future__ import annotations


class StacktriError(Exception):
    """Base class for all toolkit errors."""


class InvalidGraph(StacktriError):
    """Vertex ids out of range, self-loops, or malformed edge data."""


class InvalidEmbedding(StacktriError):
    """Rotation data that is not a plane (genus-0) embedding of its graph."""


class NonplanarError(StacktriError):
    """The abstract graph admits no plane embedding."""


class TooSmall(StacktriError):
    """Operation requires at least 3 vertices."""


class TooLarge(StacktriError):
    """Instance exceeds a hard size guard (exact oracles only)."""


class NotATriangle(StacktriError):
    """A 3-tuple expected to induce a triangle does not."""


class NotAThreeTree(StacktriError):
    """Graph is not a 3-tree (rerooting and peeling operations)."""


class NotPermutation(StacktriError):
    """Order passed as an elimination scheme is not a permutation of V."""


class NotTriangulation(StacktriError):
    """Plane graph expected to have all-triangle faces does not."""


class NoSuchFace(StacktriError):
    """Face lookup (by id, provenance, or incidence constraint) found nothing."""


class SplitAcrossFaces(StacktriError):
    """A vertex set expected to sit inside one face touches several."""


class TreewidthExceeded(StacktriError):
    """Input graph has treewidth larger than 3."""


class InternalK33(StacktriError):
    """Internal invariant breach: separator pattern implies a K33 minor."""


class FormatError(StacktriError):
    """Malformed planegraph v1 text."""
