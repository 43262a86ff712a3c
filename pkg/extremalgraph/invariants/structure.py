"""Tutte-Berge witnesses and the Gallai-Edmonds partition.

For a set of vertices B of a graph G, every matching leaves at least odd(G - B) - |B| vertices exposed, where
odd(G - B) is the number of connected components of G - B with an odd number of vertices. Hence
nu(G) <= (n + |B| - odd(G - B)) / 2, and equality holds for some B (Tutte-Berge formula). A `TutteBergeWitness`
records such a set B with the sizes of the components of G - B and the bound it certifies.

The Gallai-Edmonds partition (D, A, C) is computed from its definition: D is the set of vertices missed by some
maximum matching, that is the vertices v with nu(G - v) = nu(G); A = N(D) - D; C is the rest. The set A is always an
optimal Tutte-Berge set.
"""

from dataclasses import dataclass
from itertools import combinations

from extremalgraph.exceptions.graph_errors import CapacityError, GraphError
from extremalgraph.graph.graph import component_masks, iter_bits
from extremalgraph.invariants.matching import matching_number

__author__ = "Dimitri Watel"
__copyright__ = "Copyright 2018, extremalgraph"

TUTTE_BERGE_MAX_VERTICES = 16
"""Maximum number of vertices of the exhaustive search over all the sets B."""

GALLAI_EDMONDS_MAX_VERTICES = 512
"""Maximum number of vertices of the Gallai-Edmonds partition (n + 1 matching computations)."""


@dataclass(frozen=True)
class TutteBergeWitness:
    """A vertex set B with the components of G - B.

    odd_components and even_components are the sizes of the odd and even components of G - B, in nonincreasing
    order. bound = (n + b - odd(G - B)) / 2 is an upper bound on the matching number; when every component is odd it
    is b + sum((a_i - 1) / 2).
    """

    B: tuple
    odd_components: tuple
    even_components: tuple

    @property
    def b(self):
        return len(self.B)

    @property
    def deficiency(self):
        """Return odd(G - B) - |B|."""
        return len(self.odd_components) - len(self.B)

    @property
    def bound(self):
        return len(self.B) + sum((a - 1) // 2 for a in self.odd_components) + sum(a // 2 for a in
                                                                                  self.even_components)

    @property
    def mask(self):
        """Return the bitset of B."""
        bits = 0
        for v in self.B:
            bits |= 1 << v
        return bits

    def to_dict(self):
        return {'B': list(self.B), 'b': self.b, 'odd_components': list(self.odd_components),
                'even_components': list(self.even_components), 'deficiency': self.deficiency,
                'bound': self.bound}


@dataclass(frozen=True)
class GallaiEdmonds:
    """The partition (D, A, C) of the vertices, each part a sorted tuple."""

    D: tuple
    A: tuple
    C: tuple

    def to_dict(self):
        return {'D': list(self.D), 'A': list(self.A), 'C': list(self.C)}


def _witness(g, bits):
    sizes = [c.bit_count() for c in component_masks(g, bits)]
    odd = tuple(sorted((a for a in sizes if a % 2 == 1), reverse=True))
    even = tuple(sorted((a for a in sizes if a % 2 == 0), reverse=True))
    return TutteBergeWitness(tuple(iter_bits(bits)), odd, even)


def witness_from_set(g, vertices):
    """Return the `TutteBergeWitness` of the vertex set B = vertices in g (not necessarily optimal)."""
    return _witness(g, g.vertex_set(vertices))


def is_witness_for(g, witness):
    """Return True if witness describes exactly the components of g minus its set B."""
    try:
        return witness_from_set(g, witness.B) == witness
    except (TypeError, GraphError):
        return False


def tutte_berge_max_deficiency(g, max_vertices=None):
    """Return a `TutteBergeWitness` maximizing odd(G - B) - |B|; its bound is the matching number of g.

    Every subset B is enumerated. Ties are broken by the smallest |B|, then by the lexicographically smallest B.

    :param max_vertices: the capacity, TUTTE_BERGE_MAX_VERTICES if None.
    :raises CapacityError: if g has more vertices than the capacity.
    """
    limit = TUTTE_BERGE_MAX_VERTICES if max_vertices is None else max_vertices
    n = g.n
    if n > limit:
        raise CapacityError('the Tutte-Berge enumeration', n, limit)
    best = _witness(g, 0)
    for b in range(1, n + 1):
        # odd(G - B) <= n - b
        if n - 2 * b <= best.deficiency:
            break
        for subset in combinations(range(n), b):
            bits = 0
            for v in subset:
                bits |= 1 << v
            odd = sum(1 for c in component_masks(g, bits) if c.bit_count() % 2 == 1)
            if odd - b > best.deficiency:
                best = _witness(g, bits)
    return best


def gallai_edmonds(g, max_vertices=None):
    """Return the `GallaiEdmonds` partition of g.

    :param max_vertices: the capacity, GALLAI_EDMONDS_MAX_VERTICES if None.
    :raises CapacityError: if g has more vertices than the capacity.
    """
    limit = GALLAI_EDMONDS_MAX_VERTICES if max_vertices is None else max_vertices
    if g.n > limit:
        raise CapacityError('the Gallai-Edmonds partition', g.n, limit)
    nu, _ = matching_number(g)
    d = 0
    for v in g:
        if matching_number(g.without_vertices(1 << v)[0])[0] == nu:
            d |= 1 << v
    a = 0
    for v in iter_bits(d):
        a |= g.adj[v]
    a &= ~d
    c = ((1 << g.n) - 1) & ~d & ~a
    return GallaiEdmonds(tuple(iter_bits(d)), tuple(iter_bits(a)), tuple(iter_bits(c)))


def gallai_edmonds_witness(g):
    """Return the `TutteBergeWitness` of the set A of the Gallai-Edmonds partition; its bound is nu(g)."""
    return witness_from_set(g, gallai_edmonds(g).A)
