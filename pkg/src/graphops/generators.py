"""Named graph families: paths, cycles, complete (bi)partite graphs,
grids, generalized Petersen graphs, and hat attachments on triangle-free
cubic graphs."""

from __future__ import annotations

from itertools import combinations

from .core import Graph, GraphError


def path(n: int) -> Graph:
    """Path 0-1-...-(n-1). n >= 1; P_1 is a single vertex."""
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph.from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph.from_edge_list(n, list(combinations(range(n), 2)))


def edgeless(n: int) -> Graph:
    if n < 1:
        raise GraphError("edgeless graph needs n >= 1")
    return Graph.from_edge_list(n, [])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with the first part on 0..a-1."""
    if a < 1 or b < 1:
        raise GraphError("complete bipartite needs a, b >= 1")
    return Graph.from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def complete_minus_edge(q: int) -> Graph:
    """K_q with the single edge (0, 1) removed; q >= 3."""
    if q < 3:
        raise GraphError("complete minus an edge needs q >= 3")
    return Graph.from_edge_list(
        q, [e for e in combinations(range(q), 2) if e != (0, 1)]
    )


def grid(m: int, n: int) -> Graph:
    """Cartesian product P_m x P_n, vertices (i, j) labeled row-major i*n + j."""
    if m < 1 or n < 1:
        raise GraphError("grid needs positive dimensions")
    edges = []
    for i in range(m):
        for j in range(n):
            if j + 1 < n:
                edges.append((i * n + j, i * n + j + 1))
            if i + 1 < m:
                edges.append((i * n + j, (i + 1) * n + j))
    return Graph.from_edge_list(m * n, edges)


def generalized_petersen(n: int, k: int) -> Graph:
    """GP(n, k): outer cycle u_0..u_{n-1}, spokes u_i-v_i, inner edges
    v_i-v_{i+k mod n}. Order 2n and cubic; requires n >= 3, 1 <= k < n/2."""
    if n < 3 or k < 1 or 2 * k >= n:
        raise GraphError(f"generalized Petersen parameters out of range: ({n}, {k})")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    edges += [(n + i, n + (i + k) % n) for i in range(n)]
    return Graph.from_edge_list(2 * n, edges)


def petersen() -> Graph:
    """The Petersen graph, GP(5, 2)."""
    return generalized_petersen(5, 2)


def is_triangle_free(g: Graph) -> bool:
    """True iff no three vertices are mutually adjacent (checked, not assumed)."""
    for u, v in g.edges():
        if g.neighbors_mask(u) & g.neighbors_mask(v):
            return False
    return True


def is_cubic(g: Graph) -> bool:
    return all(g.degree(v) == 3 for v in range(g.n))


def add_hat(g: Graph, y: int, n1: int, n2: int) -> Graph:
    """Attach a new vertex x adjacent to exactly {y, n1, n2}, where n1 and
    n2 are distinct neighbors of y in a triangle-free cubic graph.

    The preconditions are validated strictly: arbitrary three-vertex
    attachments are rejected.
    """
    if not is_triangle_free(g):
        raise GraphError("hat attachment requires a triangle-free base graph")
    if not is_cubic(g):
        raise GraphError("hat attachment requires a cubic base graph")
    if n1 == n2:
        raise GraphError("hat neighbors must be distinct")
    if not (g.are_adjacent(y, n1) and g.are_adjacent(y, n2)):
        raise GraphError("hat neighbors must both be adjacent to the target vertex")
    x = g.n
    return Graph.from_edge_list(
        g.n + 1, g.edge_list() + [(y, x), (n1, x), (n2, x)]
    )


def default_hat(g: Graph) -> Graph:
    """Hat at vertex 0 using its two lowest-labeled neighbors."""
    nbrs = g.neighbors(0)
    if len(nbrs) < 2:
        raise GraphError("vertex 0 has fewer than two neighbors")
    return add_hat(g, 0, nbrs[0], nbrs[1])
