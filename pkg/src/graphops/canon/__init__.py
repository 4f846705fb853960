"""Canonical forms and isomorphism testing.

``canonical_form(g)`` returns a byte string that is equal for two graphs
exactly when they are isomorphic — a total invariant, not a hash. The
computation runs on a compiled kernel when the extension module built from
``_kernel_c.pyx`` is importable, and otherwise on the pure-Python kernel;
set ``GRAPHOPS_PURE=1`` to force the fallback. Both kernels implement the
same algorithm and produce identical bytes.
"""

from __future__ import annotations

import os
from functools import lru_cache

from ..core import Graph

if os.environ.get("GRAPHOPS_PURE"):
    from . import _kernel_py as _kernel

    KERNEL = "python"
else:
    try:
        from . import _kernel_c as _kernel  # type: ignore[attr-defined]

        KERNEL = "compiled"
    except ImportError:
        from . import _kernel_py as _kernel

        KERNEL = "python"

DEFAULT_CANON_CAP = 512


class CanonCapExceeded(RuntimeError):
    """Graph order exceeds the configured canonicalization cap."""


@lru_cache(maxsize=4096)
def _canon_cached(g: Graph) -> bytes:
    return _kernel.canonical_bits(g.n, g._rows)


def canonical_form(g: Graph, *, cap: int = DEFAULT_CANON_CAP) -> bytes:
    """Canonical byte string of g's isomorphism class.

    Relabeling never changes the result; canonical_form(g) == canonical_form(h)
    iff g and h are isomorphic. Raises CanonCapExceeded when g.n > cap
    (default 512): exact canonicalization of large graphs can be expensive
    and callers must opt in explicitly.
    """
    if g.n > cap:
        raise CanonCapExceeded(
            f"order {g.n} exceeds canonicalization cap {cap}"
        )
    return _canon_cached(g)


def is_isomorphic(g: Graph, h: Graph, *, cap: int = DEFAULT_CANON_CAP) -> bool:
    """True iff an adjacency-preserving bijection between g and h exists."""
    if g.n != h.n or g.size() != h.size():
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_form(g, cap=cap) == canonical_form(h, cap=cap)
