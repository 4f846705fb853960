"""Immutable simple undirected graphs with bitset adjacency.

Vertices are dense integers 0..n-1. Each adjacency row is a Python int
used as a bitset, which keeps neighborhood intersections and degree
counts cheap without any third-party dependency.

The empty result of an operator applied outside its domain is represented
by ``None`` (see ``MaybeGraph``), never by a zero-order graph: graphs here
always have at least one vertex.
"""

from __future__ import annotations

from typing import Iterable, Iterator

MAX_ORDER = 1 << 16

MaybeGraph = "Graph | None"


class GraphError(ValueError):
    """Invalid graph construction or vertex index."""


class Graph:
    """Simple undirected graph on vertices 0..n-1, immutable after construction."""

    __slots__ = ("n", "_rows", "_hash")

    def __init__(self, n: int, rows: tuple[int, ...]):
        # Internal constructor; use from_edge_list() for validated input.
        self.n = n
        self._rows = rows
        self._hash = hash((n, rows))

    # -- construction ------------------------------------------------

    @staticmethod
    def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph of order n with the given edges.

        Duplicate edges (in either orientation) collapse. Self-loops and
        out-of-range endpoints are rejected.
        """
        if n < 1:
            raise GraphError(f"graph order must be >= 1, got {n}")
        if n > MAX_ORDER:
            raise GraphError(f"graph order {n} exceeds the cap {MAX_ORDER}")
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for order {n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, tuple(rows))

    @staticmethod
    def _from_rows(n: int, rows: list[int]) -> "Graph":
        # Trusted path for operator code that builds symmetric rows directly.
        return Graph(n, tuple(rows))

    # -- accessors ---------------------------------------------------

    def order(self) -> int:
        return self.n

    def size(self) -> int:
        """Number of edges."""
        return sum(r.bit_count() for r in self._rows) // 2

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._rows[v].bit_count()

    def are_adjacent(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._rows[u] >> v & 1)

    def neighbors_mask(self, v: int) -> int:
        """Adjacency row of v as an int bitset."""
        self._check_vertex(v)
        return self._rows[v]

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.neighbors_mask(v))

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            higher = self._rows[u] >> (u + 1)
            while higher:
                low = higher & -higher
                yield (u, u + 1 + low.bit_length() - 1)
                higher ^= low

    def edge_list(self) -> list[tuple[int, int]]:
        return list(self.edges())

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(r.bit_count() for r in self._rows))

    def components(self) -> list[tuple[int, ...]]:
        """Connected components as sorted vertex tuples, ordered by least vertex."""
        seen = 0
        out = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                grow = 0
                for v in _bits(frontier):
                    grow |= self._rows[v]
                frontier = grow & ~comp
                comp |= grow
            seen |= comp
            out.append(tuple(_bits(comp)))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    # -- derived graphs ----------------------------------------------

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph induced on the given vertex set, relabeled 0..k-1 in
        ascending order of original label."""
        vs = sorted(set(vertices))
        if not vs:
            raise GraphError("induced subgraph needs a non-empty vertex set")
        for v in vs:
            self._check_vertex(v)
        pos = {v: i for i, v in enumerate(vs)}
        rows = [0] * len(vs)
        for v in vs:
            row = self._rows[v]
            for w in vs:
                if row >> w & 1:
                    rows[pos[v]] |= 1 << pos[w]
        return Graph(len(vs), tuple(rows))

    def disjoint_union(self, other: "Graph") -> "Graph":
        """Disjoint union; the second operand's labels shift by self.n."""
        shift = self.n
        rows = list(self._rows) + [r << shift for r in other._rows]
        return Graph(self.n + other.n, tuple(rows))

    # -- plumbing ----------------------------------------------------

    def to_bytes(self) -> bytes:
        """Label-exact serialization (not isomorphism-invariant)."""
        width = (self.n + 7) // 8
        return self.n.to_bytes(4, "big") + b"".join(
            r.to_bytes(width, "big") for r in self._rows
        )

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise GraphError(f"vertex {v} out of range for order {self.n}")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._rows == other._rows
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_list()})"


def _bits(mask: int) -> list[int]:
    """Indices of set bits, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out
