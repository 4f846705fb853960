"""Enumeration of the induced substructures whose intersection graphs the
operators are built from: induced paths, induced (chordless) cycles,
triangles, and claws, plus the clique edge partition search used for line
graph recognition.

Members are identified with their vertex sets (an induced subgraph is
determined by its vertex set), listed once each in lexicographic order,
and every member carries its edge set because operator adjacency is
"share at least one edge". Caps raise explicit errors; nothing is ever
silently truncated.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .core import Graph, _bits

DEFAULT_MEMBER_LIMIT = 10**6
DEFAULT_WORK_LIMIT = 10**6


class EnumerationLimit(RuntimeError):
    """A configured enumeration cap was hit before completion."""


class MemberLimitExceeded(EnumerationLimit):
    pass


class WorkLimitExceeded(EnumerationLimit):
    pass


class SubstructureKind(Enum):
    INDUCED_PATH = "induced-path"
    INDUCED_CYCLE = "induced-cycle"
    TRIANGLE = "triangle"
    CLAW = "claw"


@dataclass(frozen=True)
class SubstructureSet:
    kind: SubstructureKind
    members: tuple[tuple[int, ...], ...]
    edge_sets: tuple[frozenset[tuple[int, int]], ...]

    def __len__(self) -> int:
        return len(self.members)


def _finish(kind, found):
    """Sort (member, edges) pairs lexicographically by member."""
    found.sort(key=lambda t: t[0])
    return SubstructureSet(
        kind,
        tuple(m for m, _ in found),
        tuple(e for _, e in found),
    )


def induced_paths(
    g: Graph,
    *,
    member_limit: int = DEFAULT_MEMBER_LIMIT,
    work_limit: int = DEFAULT_WORK_LIMIT,
) -> SubstructureSet:
    """Every vertex set inducing a path on >= 2 vertices, once each.

    DFS over vertex sequences grown at the right end: a prefix of an
    induced path is an induced path, so each sequence stays induced
    throughout. A path and its reversal are the same member; sequences are
    emitted only when the first endpoint is below the last.
    """
    rows = [g.neighbors_mask(v) for v in range(g.n)]
    found = []
    work = 0
    stack = []
    for a in range(g.n):
        for b in g.neighbors(a):
            stack.append(((a, b), 0, (1 << a) | (1 << b)))
    while stack:
        work += 1
        if work > work_limit:
            raise WorkLimitExceeded(f"induced path search exceeded {work_limit} steps")
        seq, early, visited = stack.pop()
        last = seq[-1]
        if seq[0] < last:
            edges = frozenset(
                (min(x, y), max(x, y)) for x, y in zip(seq, seq[1:])
            )
            found.append((tuple(sorted(seq)), edges))
            if len(found) > member_limit:
                raise MemberLimitExceeded(
                    f"more than {member_limit} induced paths"
                )
        cand = rows[last] & ~visited & ~early
        new_early = early | rows[last]
        while cand:
            low = cand & -cand
            w = low.bit_length() - 1
            cand ^= low
            stack.append((seq + (w,), new_early, visited | low))
    return _finish(SubstructureKind.INDUCED_PATH, found)


def induced_cycles(
    g: Graph,
    *,
    member_limit: int = DEFAULT_MEMBER_LIMIT,
    work_limit: int = DEFAULT_WORK_LIMIT,
) -> SubstructureSet:
    """Every vertex set inducing a chordless cycle of length >= 3, once each.

    Standard chordless-cycle search: grow an induced path from the least
    cycle vertex s through vertices above s; a candidate adjacent to s
    closes a cycle (emitted when the second vertex is below the closing
    one, which kills the reversed traversal) and is never extended, since
    an interior vertex adjacent to s would become a chord.
    """
    rows = [g.neighbors_mask(v) for v in range(g.n)]
    found = []
    work = 0
    for s in range(g.n):
        above = -1 << (s + 1)
        starts = rows[s] & above
        stack = []
        for v1 in _bits(starts):
            stack.append(((s, v1), 0, (1 << s) | (1 << v1)))
        while stack:
            work += 1
            if work > work_limit:
                raise WorkLimitExceeded(
                    f"induced cycle search exceeded {work_limit} steps"
                )
            seq, early, visited = stack.pop()
            last = seq[-1]
            cand = rows[last] & above & ~visited & ~early
            closing = cand & rows[s]
            extending = cand & ~rows[s]
            if len(seq) >= 2:
                v1 = seq[1]
                close = closing & (-1 << (v1 + 1))
                while close:
                    low = close & -close
                    w = low.bit_length() - 1
                    close ^= low
                    cyc = seq + (w,)
                    edges = frozenset(
                        (min(x, y), max(x, y))
                        for x, y in zip(cyc, cyc[1:] + (s,))
                    )
                    found.append((tuple(sorted(cyc)), edges))
                    if len(found) > member_limit:
                        raise MemberLimitExceeded(
                            f"more than {member_limit} induced cycles"
                        )
            new_early = early | rows[last]
            while extending:
                low = extending & -extending
                w = low.bit_length() - 1
                extending ^= low
                stack.append((seq + (w,), new_early, visited | low))
    return _finish(SubstructureKind.INDUCED_CYCLE, found)


def triangles(
    g: Graph,
    *,
    member_limit: int = DEFAULT_MEMBER_LIMIT,
    work_limit: int = DEFAULT_WORK_LIMIT,
) -> SubstructureSet:
    """All 3-subsets inducing K_3, via common neighborhoods of edges."""
    found = []
    work = 0
    for u, v in g.edges():
        work += 1
        if work > work_limit:
            raise WorkLimitExceeded(f"triangle search exceeded {work_limit} steps")
        common = g.neighbors_mask(u) & g.neighbors_mask(v) & (-1 << (v + 1))
        while common:
            low = common & -common
            w = low.bit_length() - 1
            common ^= low
            found.append(
                ((u, v, w), frozenset(((u, v), (u, w), (v, w))))
            )
            if len(found) > member_limit:
                raise MemberLimitExceeded(f"more than {member_limit} triangles")
    return _finish(SubstructureKind.TRIANGLE, found)


def claws(
    g: Graph,
    *,
    member_limit: int = DEFAULT_MEMBER_LIMIT,
    work_limit: int = DEFAULT_WORK_LIMIT,
) -> SubstructureSet:
    """All 4-subsets inducing K_{1,3}, enumerated as a center plus an
    independent triple of its neighbors. The center of a claw is its unique
    degree-3 vertex, so no member appears twice."""
    found = []
    work = 0
    for c in range(g.n):
        nbrs = g.neighbors(c)
        if len(nbrs) < 3:
            continue
        for a, b, d in combinations(nbrs, 3):
            work += 1
            if work > work_limit:
                raise WorkLimitExceeded(f"claw search exceeded {work_limit} steps")
            if (
                g.neighbors_mask(a) >> b & 1
                or g.neighbors_mask(a) >> d & 1
                or g.neighbors_mask(b) >> d & 1
            ):
                continue
            member = tuple(sorted((c, a, b, d)))
            edges = frozenset(
                (min(c, x), max(c, x)) for x in (a, b, d)
            )
            found.append((member, edges))
            if len(found) > member_limit:
                raise MemberLimitExceeded(f"more than {member_limit} claws")
    return _finish(SubstructureKind.CLAW, found)


_ENUMERATORS = {
    SubstructureKind.INDUCED_PATH: induced_paths,
    SubstructureKind.INDUCED_CYCLE: induced_cycles,
    SubstructureKind.TRIANGLE: triangles,
    SubstructureKind.CLAW: claws,
}


def enumerate_substructures(g: Graph, kind: SubstructureKind, **limits) -> SubstructureSet:
    return _ENUMERATORS[kind](g, **limits)


# -- Krausz clique edge partitions -------------------------------------


def clique_edge_partition(
    g: Graph,
    max_width: int | None = None,
    *,
    node_limit: int = 200_000,
) -> tuple[bool | None, list[tuple[int, ...]] | None]:
    """Search for a partition of E(G) into cliques with every vertex in at
    most two of them.

    Returns (True, witness) when found, (False, None) when the exhaustive
    search rules one out, and (None, None) when node_limit stops the search
    first. max_width optionally caps clique sizes considered. Intended for
    small orders (around 12 or less).
    """
    edges = g.edge_list()
    if not edges:
        return (True, [])
    eidx = {e: i for i, e in enumerate(edges)}
    n = g.n
    vcount = [0] * n
    chosen: list[tuple[int, ...]] = []
    nodes = 0

    def clique_candidates(u, v, uncovered):
        """All cliques through edge (u, v) whose internal edges are all
        uncovered, largest first."""
        common = [
            w
            for w in _bits(g.neighbors_mask(u) & g.neighbors_mask(v))
            if vcount[w] < 2
        ]
        out = [(u, v)]
        stack = [((), common)]
        while stack:
            base, ext = stack.pop()
            for i, w in enumerate(ext):
                good = True
                for x in (u, v) + base:
                    e = (min(w, x), max(w, x))
                    ei = eidx.get(e)
                    if ei is None or not uncovered >> ei & 1:
                        good = False
                        break
                if not good:
                    continue
                cl = base + (w,)
                if max_width is None or len(cl) + 2 <= max_width:
                    out.append(tuple(sorted((u, v) + cl)))
                    stack.append((cl, ext[i + 1 :]))
        out.sort(key=lambda c: (-len(c), c))
        return out

    def search(uncovered) -> bool | None:
        nonlocal nodes
        nodes += 1
        if nodes > node_limit:
            return None
        if uncovered == 0:
            return True
        low = uncovered & -uncovered
        u, v = edges[low.bit_length() - 1]
        if vcount[u] >= 2 or vcount[v] >= 2:
            return False
        hit_cap = False
        for cl in clique_candidates(u, v, uncovered):
            if any(vcount[w] >= 2 for w in cl):
                continue
            mask = 0
            for x, y in combinations(cl, 2):
                mask |= 1 << eidx[(x, y)]
            for w in cl:
                vcount[w] += 1
            chosen.append(cl)
            sub = search(uncovered & ~mask)
            if sub:
                return True
            chosen.pop()
            for w in cl:
                vcount[w] -= 1
            if sub is None:
                hit_cap = True
                break
        return None if hit_cap else False

    full = (1 << len(edges)) - 1
    result = search(full)
    if result:
        return (True, list(chosen))
    return (result, None)
