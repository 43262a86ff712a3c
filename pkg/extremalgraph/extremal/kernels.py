"""Fast exact invariants for the tiny graphs of the exhaustive enumeration.

The enumeration visits up to 2^28 edge sets, so it does not build `Graph` objects. These kernels work directly on a
list of neighborhood bitsets and on bitsets of available vertices. They are exact but exponential; they are meant for
graphs with at most 8 vertices.
"""

from extremalgraph.extremal.formulas import erdos_gallai_edges, turan_edges
from extremalgraph.graph.graph import pairs

__author__ = "Dimitri Watel"
__copyright__ = "Copyright 2018, extremalgraph"


class EdgeTable:
    """Bit tables mapping the pair index i to its extremities for graphs on n vertices."""

    def __init__(self, n):
        self.n = n
        self.pairs = pairs(n)
        self.nb_pairs = len(self.pairs)
        self.full = (1 << n) - 1
        self.__ends = [(u, 1 << u, v, 1 << v) for u, v in self.pairs]

    def adjacency(self, mask):
        """Return the neighborhoods of the graph whose edge set is mask."""
        adj = [0] * self.n
        ends = self.__ends
        while mask:
            low = mask & -mask
            u, ub, v, vb = ends[low.bit_length() - 1]
            adj[u] |= vb
            adj[v] |= ub
            mask ^= low
        return adj


def matching_at_least(adj, avail, target):
    """Return the size of a largest matching inside avail, or any value >= target once target is reached.

    The result is exact whenever it is below target.
    """
    count = avail.bit_count()
    if count // 2 < target:
        target = count // 2
    if target <= 0:
        return 0
    low = avail & -avail
    rest = avail ^ low
    best = 0
    neighbors = adj[low.bit_length() - 1] & rest
    while neighbors:
        u = neighbors & -neighbors
        r = 1 + matching_at_least(adj, rest ^ u, target - 1)
        if r > best:
            best = r
            if best >= target:
                return best
        neighbors ^= u
    if rest.bit_count() // 2 > best:
        r = matching_at_least(adj, rest, target)
        if r > best:
            best = r
    return best


def matching_size(adj, avail):
    """Return the exact matching number of the graph induced by avail."""
    return matching_at_least(adj, avail, avail.bit_count() // 2)


def clique_size(adj, candidates):
    """Return the size of a largest clique inside candidates.

    Each clique is explored once, from its smallest vertex upward.
    """
    best = 0
    while candidates:
        if candidates.bit_count() <= best:
            return best
        low = candidates & -candidates
        candidates ^= low
        r = 1 + clique_size(adj, candidates & adj[low.bit_length() - 1])
        if r > best:
            best = r
    return best


def invariant_floors(n):
    """Return, for each edge count m of a graph on n vertices, lower bounds (omega_min, nu_min) from m alone.

    omega_min is the smallest k with t(n, k) >= m (Turan) and nu_min the smallest s whose Erdos-Gallai maximum is at
    least m.
    """
    floors = []
    for m in range(n * (n - 1) // 2 + 1):
        k = 1
        while turan_edges(n, k) < m:
            k += 1
        s = 0
        while erdos_gallai_edges(n, s) < m:
            s += 1
        floors.append((k, s))
    return floors
