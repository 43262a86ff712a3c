"""Maximum matchings of general graphs.

Provide `matching_number`, an implementation of the Edmonds blossom algorithm with explicit blossom contraction
(O(n^3), see https://en.wikipedia.org/wiki/Blossom_algorithm), and `matching_number_oracle`, an independent dynamic
programming over vertex subsets used to check it on small graphs.

Both are deterministic: vertices and neighbors are always visited in increasing order.
"""

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from extremalgraph.exceptions.graph_errors import CapacityError
from extremalgraph.graph.graph import iter_bits

__author__ = "Dimitri Watel"
__copyright__ = "Copyright 2018, extremalgraph"

BLOSSOM_MAX_VERTICES = 4096
"""Maximum number of vertices accepted by the blossom algorithm."""

ORACLE_MAX_VERTICES = 22
"""Maximum number of vertices accepted by the subset dynamic programming."""


@dataclass(frozen=True)
class Matching:
    """A set of pairwise disjoint edges, stored as sorted pairs (u, v) with u < v."""

    pairs: tuple

    def __len__(self):
        return len(self.pairs)

    @property
    def vertices(self):
        """Return the bitset of the matched vertices."""
        bits = 0
        for u, v in self.pairs:
            bits |= 1 << u | 1 << v
        return bits

    def is_valid(self, g):
        """Return True if every pair is an edge of g and the pairs are pairwise vertex-disjoint."""
        seen = set()
        for u, v in self.pairs:
            if (u, v) not in g or u in seen or v in seen:
                return False
            seen.update((u, v))
        return True


def _lca(match, base, parent, a, b):
    seen = set()
    while True:
        a = base[a]
        seen.add(a)
        if match[a] == -1:
            break
        a = parent[match[a]]
    while True:
        b = base[b]
        if b in seen:
            return b
        b = parent[match[b]]


def _mark_path(match, base, parent, blossom, v, b, child):
    """Mark the bases of the blossom on the path from v down to the base b and relink the parents through child."""
    while base[v] != b:
        blossom[base[v]] = blossom[base[match[v]]] = True
        parent[v] = child
        child = match[v]
        v = parent[match[v]]


def _find_augmenting_path(neighbors, match, root):
    """Grow an alternating tree from the exposed vertex root, contracting the blossoms on the fly.

    Return the exposed vertex ending an augmenting path and the parent array, or -1 if there is no such path.
    """
    n = len(neighbors)
    even = [False] * n
    parent = [-1] * n
    base = list(range(n))
    even[root] = True
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for to in neighbors[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                # odd cycle: contract the blossom on its base
                cur = _lca(match, base, parent, v, to)
                blossom = [False] * n
                _mark_path(match, base, parent, blossom, v, cur, to)
                _mark_path(match, base, parent, blossom, to, cur, v)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not even[i]:
                            even[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    return to, parent
                even[match[to]] = True
                queue.append(match[to])
    return -1, parent


def maximum_matching(g):
    """Return a maximum matching of g as a `Matching`.

    :raises CapacityError: if g has more than BLOSSOM_MAX_VERTICES vertices.
    """
    n = g.n
    if n > BLOSSOM_MAX_VERTICES:
        raise CapacityError('the blossom algorithm', n, BLOSSOM_MAX_VERTICES)
    neighbors = [list(iter_bits(nu)) for nu in g.adj]
    match = [-1] * n

    # greedy start
    for u in range(n):
        if match[u] == -1:
            for v in neighbors[u]:
                if match[v] == -1:
                    match[u], match[v] = v, u
                    break

    for root in range(n):
        if match[root] != -1 or not neighbors[root]:
            continue
        end, parent = _find_augmenting_path(neighbors, match, root)
        while end != -1:
            pv = parent[end]
            ppv = match[pv]
            match[end], match[pv] = pv, end
            end = ppv
    return Matching(tuple((u, v) for u, v in enumerate(match) if u < v))


def matching_number(g):
    """Return the pair (nu, matching) where nu is the matching number of g and matching a witness of that size."""
    matching = maximum_matching(g)
    return len(matching), matching


def matching_number_oracle(g):
    """Return the matching number of g by dynamic programming over vertex subsets.

    f(S) is the maximum of f(S - {v}) and 1 + f(S - {v, u}) over the neighbors u of v in S, where v is the smallest
    vertex of S.

    :raises CapacityError: if g has more than ORACLE_MAX_VERTICES vertices.
    """
    if g.n > ORACLE_MAX_VERTICES:
        raise CapacityError('the matching oracle', g.n, ORACLE_MAX_VERTICES)
    adj = g.adj

    @lru_cache(maxsize=None)
    def f(subset):
        if not subset:
            return 0
        low = subset & -subset
        v = low.bit_length() - 1
        rest = subset ^ low
        best = f(rest)
        for u in iter_bits(adj[v] & rest):
            best = max(best, 1 + f(rest & ~(1 << u)))
        return best

    return f((1 << g.n) - 1)
