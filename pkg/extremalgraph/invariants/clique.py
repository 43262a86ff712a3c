"""Maximum cliques by branch and bound over bitsets.

The search keeps a current clique and a bitset of candidates adjacent to all of it. The candidates are greedily
colored; a candidate of color c can extend the current clique by at most c vertices, so the candidates are explored
from the highest color down and the branch is cut as soon as that bound cannot beat the best clique found.
"""

from extremalgraph.exceptions.graph_errors import CapacityError

__author__ = "Dimitri Watel"
__copyright__ = "Copyright 2018, extremalgraph"

CLIQUE_MAX_VERTICES = 128
"""Maximum number of vertices accepted by the exact clique search."""


def _color_classes(adj, candidates):
    """Return the candidates as (vertex, color) pairs sorted by nondecreasing greedy color."""
    order = []
    color = 0
    uncolored = candidates
    while uncolored:
        color += 1
        available = uncolored
        while available:
            low = available & -available
            v = low.bit_length() - 1
            available &= ~low & ~adj[v]
            uncolored ^= low
            order.append((v, color))
    return order


class _CliqueSearch:

    def __init__(self, adj, stop_at):
        self.adj = adj
        self.stop_at = stop_at
        self.best = ()

    def expand(self, clique, candidates):
        """Return True as soon as a clique of size stop_at is found."""
        for v, color in reversed(_color_classes(self.adj, candidates)):
            if len(clique) + color <= len(self.best):
                return False
            grown = clique + (v,)
            rest = candidates & self.adj[v]
            if rest:
                if self.expand(grown, rest):
                    return True
            elif len(grown) > len(self.best):
                self.best = grown
                if len(grown) >= self.stop_at:
                    return True
            candidates &= ~(1 << v)
        return False


def _search(g, stop_at):
    if g.n > CLIQUE_MAX_VERTICES:
        raise CapacityError('the clique search', g.n, CLIQUE_MAX_VERTICES)
    search = _CliqueSearch(g.adj, stop_at)
    search.expand((), (1 << g.n) - 1)
    return search.best


def clique_number(g):
    """Return the pair (omega, clique) where omega is the clique number of g and clique a sorted witness.

    :raises CapacityError: if g has more than CLIQUE_MAX_VERTICES vertices.
    """
    best = _search(g, g.n + 1)
    return len(best), tuple(sorted(best))


def is_k_clique_free(g, k):
    """Return True if the clique number of g is at most k; stop at the first clique with k + 1 vertices."""
    if k >= g.n:
        return True
    return len(_search(g, k + 1)) <= k


def find_clique(g, size):
    """Return a sorted clique of g with the given number of vertices, or None if there is none."""
    if size > g.n:
        return None
    best = _search(g, size)
    return tuple(sorted(best[:size])) if len(best) >= size else None
