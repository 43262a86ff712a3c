"""Provide deterministic generators for the extremal graphs and for small named graphs.

The two extremal families are the Turan graph T(n, k), complete k-partite with class sizes as equal as possible, and
the graph G(n, k, s), complete k-partite with k - 1 balanced classes of total size s and one class of size n - s.
Both generators return the graph and its `Partition`; classes are listed larger first (the big class of G(n, k, s)
last) and use contiguous vertex labels. Empty classes are kept in the partition but own no vertex.

The module also provides a seeded random graph generator and the named fixtures used by the command line.
"""

import random
import re

from extremalgraph.exceptions.graph_errors import InvalidParameterError
from extremalgraph.graph.graph import Graph, Partition, iter_bits

__author__ = "Dimitri Watel"
__copyright__ = "Copyright 2018, extremalgraph"


def _check_count(name, x, minimum=0):
    if not isinstance(x, int) or isinstance(x, bool):
        raise TypeError()
    if x < minimum:
        raise InvalidParameterError(name + ' should be at least ' + str(minimum) + ', got ' + str(x) + '.')


def balanced_sizes(n, k):
    """Return the k class sizes of a partition of n as equal as possible, larger classes first."""
    q, r = divmod(n, k)
    return [q + 1] * r + [q] * (k - r)


def complete_multipartite(sizes):
    """Return the complete multipartite graph with the given class sizes and its partition.

    The i-th class receives the next sizes[i] labels.
    """
    classes = []
    masks = []
    start = 0
    for size in sizes:
        classes.append(tuple(range(start, start + size)))
        masks.append(((1 << size) - 1) << start)
        start += size
    full = (1 << start) - 1
    adj = []
    for mask in masks:
        adj.extend([full & ~mask] * mask.bit_count())
    return Graph._trusted(start, adj), Partition(tuple(classes))


def make_turan(n, k):
    """Return the Turan graph T(n, k) and its partition.

    :param n: number of vertices, nonnegative.
    :param k: number of classes, at least 1; k >= n gives the complete graph.
    :raises InvalidParameterError: if n < 0 or k < 1.
    """
    _check_count('n', n)
    _check_count('k', k, 1)
    return complete_multipartite(balanced_sizes(n, k))


def make_gks(n, k, s):
    """Return the graph G(n, k, s) and its partition.

    The first k - 1 classes are the balanced partition of s (as in `make_turan(s, k - 1)`), the last class has n - s
    vertices.

    :raises InvalidParameterError: if s > n, s < 0, k < 1 or if k = 1 and s > 0.
    """
    _check_count('n', n)
    _check_count('k', k, 1)
    _check_count('s', s)
    if s > n:
        raise InvalidParameterError('s should be at most n, got s = ' + str(s) + ' > n = ' + str(n) + '.')
    if k == 1 and s > 0:
        raise InvalidParameterError('G(n, 1, s) is undefined for s > 0.')
    small = balanced_sizes(s, k - 1) if k > 1 else []
    return complete_multipartite(small + [n - s])


def pad_graph(g, n):
    """Return the graph g with isolated vertices added so that it has n vertices."""
    if n < g.n:
        raise InvalidParameterError('cannot pad a graph with ' + str(g.n) + ' vertices to ' + str(n) + '.')
    return Graph._trusted(n, g.adj + (0,) * (n - g.n))


def random_graph(n, p, seed):
    """Return a random graph where each pair is an edge independently with probability p.

    The generator is `random.Random(seed)` (Mersenne Twister, identical on every platform). The pairs (u, v), u < v,
    are visited in lexicographic order and each one draws exactly one `random()` value; the pair is an edge iff that
    value is below p.

    :raises InvalidParameterError: if p is not in [0, 1].
    """
    _check_count('n', n)
    if not 0 <= p <= 1:
        raise InvalidParameterError('p should be in [0, 1], got ' + str(p) + '.')
    rng = random.Random(seed)
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph._trusted(n, adj)


def complete_graph(n):
    """Return the complete graph K_n."""
    return make_turan(n, max(n, 1))[0]


def path_graph(n):
    """Return the path 0 - 1 - ... - (n - 1) on n vertices."""
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    """Return the cycle C_n, 0 - 1 - ... - (n - 1) - 0.

    :raises InvalidParameterError: if n < 3.
    """
    if n < 3:
        raise InvalidParameterError('a cycle has at least 3 vertices, got ' + str(n) + '.')
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(k):
    """Return the star K_{1,k}; the center is the vertex 0."""
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def petersen_graph():
    """Return the Petersen graph: outer cycle 0..4, spokes i--i+5, inner pentagram on 5..9."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, edges)


def k4_minus_edge():
    """Return K_4 minus the edge 2--3 (two triangles sharing the edge 0--1)."""
    return complete_graph(4).without_edge(2, 3)


_FIXTURE_PATTERN = re.compile(r'^(K|C|P)(\d+)$')


def fixture(name):
    """Return the named graph: K<n>, C<n>, P<n>, K4E or PETERSEN (case insensitive).

    :raises InvalidParameterError: if the name is unknown.
    """
    key = name.strip().upper()
    if key == 'PETERSEN':
        return petersen_graph()
    if key == 'K4E':
        return k4_minus_edge()
    match = _FIXTURE_PATTERN.match(key)
    if match is None:
        raise InvalidParameterError('unknown graph name ' + repr(name) + '.')
    family, size = match.group(1), int(match.group(2))
    if family == 'K':
        return complete_graph(size)
    if family == 'C':
        return cycle_graph(size)
    return path_graph(size)


def partition_of(g, vertices):
    """Return the classes of the non-adjacency relation on a vertex set, when it is an equivalence relation.

    Each class is a tuple of pairwise non adjacent vertices with identical neighborhoods inside the set; return None
    if non-adjacency is not transitive on the set.
    """
    bits = g.vertex_set(vertices)
    classes = []
    left = bits
    while left:
        v = (left & -left).bit_length() - 1
        cls = bits & ~g.adj[v]
        for u in iter_bits(cls):
            if bits & ~g.adj[u] != cls:
                return None
        classes.append(tuple(iter_bits(cls)))
        left &= ~cls
    return Partition(tuple(classes))
