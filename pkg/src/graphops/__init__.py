"""Graph operators, exact isomorphism, and orbit classification for small graphs."""

from .core import Graph, GraphError, MaybeGraph
from .canon import canonical_form, is_isomorphic, CanonCapExceeded, KERNEL

__all__ = [
    "Graph",
    "GraphError",
    "MaybeGraph",
    "canonical_form",
    "is_isomorphic",
    "CanonCapExceeded",
    "KERNEL",
]
