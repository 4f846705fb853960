"""The eight graph operators as pure functions Graph -> Graph | None.

``None`` is the out-of-domain result: operators never fail on a valid
graph, they return None exactly when the defining substructure set is
empty (line/path: no edges; triangle: no triangles; cycle: no induced
cycles; claw: no claws). Complement, subdivision, and shadow are total.

Output vertex order is deterministic: line graph vertices follow the
lexicographic edge order, intersection operators follow the enumeration
module's sorted member order, subdivision numbers fresh vertices by edge
index, and shadow copies get labels shifted by the original order.
"""

from __future__ import annotations

from enum import Enum

from .core import Graph
from .substructures import (
    MemberLimitExceeded,
    SubstructureKind,
    SubstructureSet,
    enumerate_substructures,
)


class OperatorId(Enum):
    LINE = "line"
    PATH_GRAPH = "path"
    TRIANGLE_GRAPH = "triangle"
    CYCLE_GRAPH = "cycle"
    CLAW_GRAPH = "claw"
    COMPLEMENT = "complement"
    SUBDIVISION = "subdivision"
    SHADOW = "shadow"


_INTERSECTION_KIND = {
    OperatorId.PATH_GRAPH: SubstructureKind.INDUCED_PATH,
    OperatorId.TRIANGLE_GRAPH: SubstructureKind.TRIANGLE,
    OperatorId.CYCLE_GRAPH: SubstructureKind.INDUCED_CYCLE,
    OperatorId.CLAW_GRAPH: SubstructureKind.CLAW,
}


def line_graph(g: Graph, **limits) -> Graph | None:
    """Vertices are the edges of g; adjacency is a shared endpoint (unlike
    the intersection operators, whose adjacency is a shared edge)."""
    edges = g.edge_list()
    if not edges:
        return None
    incident: dict[int, list[int]] = {}
    for i, (u, v) in enumerate(edges):
        incident.setdefault(u, []).append(i)
        incident.setdefault(v, []).append(i)
    rows = [0] * len(edges)
    for group in incident.values():
        mask = 0
        for i in group:
            mask |= 1 << i
        for i in group:
            rows[i] |= mask
    for i in range(len(edges)):
        rows[i] &= ~(1 << i)
    return Graph._from_rows(len(edges), rows)


def intersection_graph_from(ss: SubstructureSet) -> Graph | None:
    """Intersection graph of a substructure set: vertex i is members[i],
    i ~ j iff i != j and the members share at least one edge."""
    count = len(ss.members)
    if count == 0:
        return None
    by_edge: dict[tuple[int, int], list[int]] = {}
    for i, es in enumerate(ss.edge_sets):
        for e in es:
            by_edge.setdefault(e, []).append(i)
    rows = [0] * count
    for group in by_edge.values():
        if len(group) < 2:
            continue
        mask = 0
        for i in group:
            mask |= 1 << i
        for i in group:
            rows[i] |= mask
    for i in range(count):
        rows[i] &= ~(1 << i)
    return Graph._from_rows(count, rows)


def intersection_operator(kind: SubstructureKind, g: Graph, **limits) -> Graph | None:
    return intersection_graph_from(enumerate_substructures(g, kind, **limits))


def path_graph(g: Graph, **limits) -> Graph | None:
    return intersection_operator(SubstructureKind.INDUCED_PATH, g, **limits)


def triangle_graph(g: Graph, **limits) -> Graph | None:
    return intersection_operator(SubstructureKind.TRIANGLE, g, **limits)


def cycle_graph(g: Graph, **limits) -> Graph | None:
    return intersection_operator(SubstructureKind.INDUCED_CYCLE, g, **limits)


def claw_graph(g: Graph, **limits) -> Graph | None:
    return intersection_operator(SubstructureKind.CLAW, g, **limits)


def complement(g: Graph, **limits) -> Graph | None:
    full = (1 << g.n) - 1
    rows = [full ^ g.neighbors_mask(v) ^ (1 << v) for v in range(g.n)]
    return Graph._from_rows(g.n, rows)


def subdivision(g: Graph, **limits) -> Graph | None:
    """Each edge ab is replaced by a-x and x-b through a fresh vertex x;
    the x for edge number i (in lexicographic edge order) is n + i."""
    n = g.n
    out = []
    for i, (u, v) in enumerate(g.edges()):
        out.append((u, n + i))
        out.append((n + i, v))
    return Graph.from_edge_list(n + g.size(), out)


def shadow(g: Graph, **limits) -> Graph | None:
    """g plus a copy g' (labels shifted by n) with each copy vertex v'
    adjacent to the neighbors of v. v' is not adjacent to v itself."""
    n = g.n
    rows = [0] * (2 * n)
    for v in range(n):
        m = g.neighbors_mask(v)
        rows[v] = m | (m << n)
        rows[n + v] = m | (m << n)
    return Graph._from_rows(2 * n, rows)


_IMPLEMENTATIONS = {
    OperatorId.LINE: line_graph,
    OperatorId.PATH_GRAPH: path_graph,
    OperatorId.TRIANGLE_GRAPH: triangle_graph,
    OperatorId.CYCLE_GRAPH: cycle_graph,
    OperatorId.CLAW_GRAPH: claw_graph,
    OperatorId.COMPLEMENT: complement,
    OperatorId.SUBDIVISION: subdivision,
    OperatorId.SHADOW: shadow,
}


def in_domain(op: OperatorId, g: Graph) -> bool:
    """Whether applying op to g yields a graph rather than the empty result."""
    if op in (OperatorId.LINE, OperatorId.PATH_GRAPH):
        return g.size() > 0
    if op == OperatorId.TRIANGLE_GRAPH:
        return any(
            g.neighbors_mask(u) & g.neighbors_mask(v) for u, v in g.edges()
        )
    if op == OperatorId.CYCLE_GRAPH:
        # a graph has an induced cycle iff it has any cycle
        return g.size() > g.n - len(g.components())
    if op == OperatorId.CLAW_GRAPH:
        try:
            return len(enumerate_substructures(g, SubstructureKind.CLAW, member_limit=1)) > 0
        except MemberLimitExceeded:
            return True
    return True


def apply(op: OperatorId, g: Graph | None, **limits) -> Graph | None:
    """Apply an operator; the empty result maps to the empty result."""
    if g is None:
        return None
    return _IMPLEMENTATIONS[op](g, **limits)
