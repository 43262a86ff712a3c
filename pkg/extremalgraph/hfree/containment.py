"""Non induced subgraph containment by backtracking.

A copy of H in G is an injective map from the vertices of H to the vertices of G sending every edge of H to an edge
of G (the non-edges of H are free). The vertices of H are mapped in breadth first order, component by component, so
that every vertex but the first of a component has an already mapped neighbor; the candidates of a vertex are then
the common neighbors of the images of its mapped neighbors, with enough degree.
"""

from extremalgraph.exceptions.graph_errors import CapacityError
from extremalgraph.graph.graph import Graph, breadth_first_search, iter_bits

__author__ = "Dimitri Watel"
__copyright__ = "Copyright 2018, extremalgraph"

PATTERN_MAX_VERTICES = 8
"""Maximum number of vertices of the pattern H."""

HOST_MAX_VERTICES = 64
"""Maximum number of vertices of the host graph G."""


def _search_order(h):
    """Return the vertices of h, each component in breadth first order from its vertex of largest degree."""
    order = []
    placed = 0
    while len(order) < h.n:
        left = [v for v in h if not placed >> v & 1]
        root = max(left, key=lambda v: (h.degree(v), -v))
        dist = breadth_first_search(h, root, placed)
        for v in sorted(dist, key=lambda u: (dist[u], -h.degree(u), u)):
            order.append(v)
            placed |= 1 << v
    return order


def find_subgraph(g, h):
    """Return a copy of h in g as a dict {vertex of h: vertex of g}, or None if g has no subgraph isomorphic to h.

    :raises TypeError: if g or h is not a `Graph`.
    :raises CapacityError: if h has more than PATTERN_MAX_VERTICES vertices or g more than HOST_MAX_VERTICES.
    """
    if not isinstance(g, Graph) or not isinstance(h, Graph):
        raise TypeError()
    if h.n > PATTERN_MAX_VERTICES:
        raise CapacityError('the subgraph search (pattern)', h.n, PATTERN_MAX_VERTICES)
    if g.n > HOST_MAX_VERTICES:
        raise CapacityError('the subgraph search (host)', g.n, HOST_MAX_VERTICES)
    if h.n > g.n or h.m > g.m:
        return None
    order = _search_order(h)
    position = {v: i for i, v in enumerate(order)}
    # Earlier neighbors of each vertex of h, in search order.
    back = [[position[w] for w in h.neighbors(v) if position[w] < i] for i, v in enumerate(order)]
    needed = [h.degree(v) for v in order]
    by_degree = {}
    for d in set(needed):
        by_degree[d] = sum(1 << x for x in g if g.degree(x) >= d)
    images = [0] * h.n

    def extend(i, used):
        if i == h.n:
            return True
        candidates = by_degree[needed[i]] & ~used
        for j in back[i]:
            candidates &= g.adj[images[j]]
        for x in iter_bits(candidates):
            images[i] = x
            if extend(i + 1, used | 1 << x):
                return True
        return False

    if not extend(0, 0):
        return None
    return {order[i]: images[i] for i in range(h.n)}


def contains_subgraph(g, h):
    """Return True if g has a (not necessarily induced) subgraph isomorphic to h. See `find_subgraph`."""
    return find_subgraph(g, h) is not None
