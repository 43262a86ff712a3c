"""Provide a small immutable graph class built on per-vertex bitsets.

Provide the class `Graph`, the class `Partition` describing the vertex classes of a complete multipartite graph, and
a few helpers shared by every package: bitset iteration, lexicographic pair indexing, breadth first search and
connected components.

The vertices of a graph on n vertices are the integers 0, 1, ..., n - 1. The neighborhood of a vertex v is an int
whose bit u is set iff u and v are adjacent. A set of vertices is represented the same way when it is passed between
functions of this package; every public function also accepts any iterable of vertices.
"""

from dataclasses import dataclass

from extremalgraph.exceptions.graph_errors import EdgeError, InvalidParameterError, VertexMembershipError

__author__ = "Dimitri Watel"
__copyright__ = "Copyright 2018, extremalgraph"

MAX_VERTICES = 4096
"""Maximum number of vertices of a graph built by this package."""


def iter_bits(x):
    """Return an iterator through the indices of the set bits of the int x, in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def pair_index(n, u, v):
    """Return the rank of the pair {u, v} among the pairs of range(n) sorted lexicographically."""
    if u > v:
        u, v = v, u
    return u * (2 * n - u - 1) // 2 + (v - u - 1)


def pairs(n):
    """Return the list of pairs (u, v), u < v, of range(n) in lexicographic order."""
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


class Graph:
    """Undirected simple graphs on the vertices 0, ..., n - 1.

    This class represents undirected simple graphs stored as one bitset of neighbors per vertex. A graph is immutable:
    the methods `with_edge`, `without_edge`, `with_neighborhood` and `induced_subgraph` build new graphs. The number
    of edges is computed once, at construction.

    The graphs are simple: there are no two edges between the same two vertices and there is no loop.

    For a graph g, it is possible to use
    - len(g) to get the number of vertices of g
    - str(g) to get its adjacency matrix
    - iter(g) to get an iterator over the vertices of g (or 'for v in g:')
    - 'elem in g' to know if a vertex (an int) or an edge (a pair of ints) named elem is in g
    - g1 == g2 to compare two labeled graphs; graphs are hashable.
    """

    __slots__ = ('__n', '__adj', '__m')

    def __init__(self, n, adj=None):
        """Build a graph with n vertices.

        Build a new graph with n vertices. If adj is None, the graph has no edge, otherwise adj is a sequence of n
        neighborhood bitsets that should be symmetric and loopless.

        :param n: the number of vertices.
        :param adj: None or the n neighborhoods of the vertices.
        :raises TypeError: if n is not an int.
        :raises InvalidParameterError: if n is negative or above MAX_VERTICES or if adj is not a valid adjacency.
        """
        if not isinstance(n, int) or isinstance(n, bool):
            raise TypeError()
        if n < 0 or n > MAX_VERTICES:
            raise InvalidParameterError('the number of vertices should be in [0, ' + str(MAX_VERTICES) + '], got ' +
                                        str(n) + '.')
        if adj is None:
            adj = (0,) * n
        else:
            adj = tuple(adj)
            if len(adj) != n:
                raise InvalidParameterError('expected ' + str(n) + ' neighborhoods, got ' + str(len(adj)) + '.')
            full = (1 << n) - 1
            for u, nu in enumerate(adj):
                if nu & ~full or nu >> u & 1:
                    raise InvalidParameterError('the neighborhood of ' + str(u) + ' is not valid.')
                for v in iter_bits(nu):
                    if not adj[v] >> u & 1:
                        raise InvalidParameterError('the adjacency is not symmetric at ' + str((u, v)) + '.')
        self.__n = n
        self.__adj = adj
        self.__m = sum(nu.bit_count() for nu in adj) // 2

    @classmethod
    def _trusted(cls, n, adj):
        """Build a graph from an adjacency already known to be valid, without any check."""
        g = cls.__new__(cls)
        g.__n = n
        g.__adj = tuple(adj)
        g.__m = sum(nu.bit_count() for nu in g.__adj) // 2
        return g

    @classmethod
    def from_edges(cls, n, edges):
        """Build the graph on n vertices with the given edges.

        :param n: the number of vertices.
        :param edges: an iterable of pairs of vertices.
        :raises VertexMembershipError: if an extremity is not in range(n).
        :raises EdgeError: if an edge is a loop or is given twice.
        """
        g = cls(n)
        adj = [0] * n
        for u, v in edges:
            g._check_vertex(u)
            g._check_vertex(v)
            if u == v:
                raise EdgeError(u, v, 'A vertex cannot be linked to itself.')
            if adj[u] >> v & 1:
                raise EdgeError(u, v, 'The edge already exists.')
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls._trusted(n, adj)

    @classmethod
    def from_edge_mask(cls, n, mask):
        """Build the graph on n vertices whose edge set is encoded by mask (bit i is the i-th pair of `pairs(n)`)."""
        adj = [0] * n
        i = 0
        for u in range(n):
            for v in range(u + 1, n):
                if mask >> i & 1:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
                i += 1
        return cls._trusted(n, adj)

    @property
    def n(self):
        """Return the number of vertices of the graph."""
        return self.__n

    @property
    def m(self):
        """Return the number of edges of the graph."""
        return self.__m

    @property
    def adj(self):
        """Return the tuple of neighborhood bitsets."""
        return self.__adj

    def __len__(self):
        return self.__n

    def __iter__(self):
        return iter(range(self.__n))

    def __contains__(self, elem):
        """Return True if elem is a vertex or an edge of the graph."""
        if isinstance(elem, int) and not isinstance(elem, bool):
            return 0 <= elem < self.__n
        if isinstance(elem, tuple) and len(elem) == 2:
            u, v = elem
            return u in self and v in self and bool(self.__adj[u] >> v & 1)
        return False

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.__n == other.__n and self.__adj == other.__adj

    def __hash__(self):
        return hash((self.__n, self.__adj))

    def _check_vertex(self, v):
        if not isinstance(v, int) or isinstance(v, bool):
            raise TypeError()
        if not 0 <= v < self.__n:
            raise VertexMembershipError(self, v)

    def vertex_set(self, vertices):
        """Return the bitset of an iterable of vertices (or of a bitset, returned unchanged after a check)."""
        if isinstance(vertices, int) and not isinstance(vertices, bool):
            if vertices < 0 or vertices >> self.__n:
                raise InvalidParameterError('the vertex set ' + bin(vertices) + ' is not a subset of the vertices.',
                                            self)
            return vertices
        bits = 0
        for v in vertices:
            self._check_vertex(v)
            bits |= 1 << v
        return bits

    def neighborhood(self, v):
        """Return the bitset of the neighbors of v."""
        self._check_vertex(v)
        return self.__adj[v]

    def neighbors(self, v):
        """Return an iterator through the neighbors of v in increasing order."""
        return iter_bits(self.neighborhood(v))

    def degree(self, v):
        """Return the number of neighbors of v."""
        return self.neighborhood(v).bit_count()

    def adjacent(self, u, v):
        """Return True if u and v are adjacent and False otherwise."""
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.__adj[u] >> v & 1)

    @property
    def edges(self):
        """Return an iterator through the edges (u, v), u < v, in lexicographic order."""
        for u in range(self.__n):
            for v in iter_bits(self.__adj[u] >> (u + 1)):
                yield u, u + 1 + v

    def non_edges(self):
        """Return an iterator through the non adjacent pairs (u, v), u < v, in lexicographic order."""
        full = (1 << self.__n) - 1
        for u in range(self.__n):
            for v in iter_bits((~self.__adj[u] & full) >> (u + 1)):
                yield u, u + 1 + v

    def edge_mask(self):
        """Return the int whose bit i is set iff the i-th pair of `pairs(n)` is an edge."""
        mask = 0
        for u, v in self.edges:
            mask |= 1 << pair_index(self.__n, u, v)
        return mask

    def with_edge(self, u, v):
        """Return a copy of the graph with the new edge uv.

        :raises VertexMembershipError: if u or v does not belong to the graph.
        :raises EdgeError: if u equals v or if uv is already an edge.
        """
        if self.adjacent(u, v):
            raise EdgeError(u, v, 'The edge already exists.')
        if u == v:
            raise EdgeError(u, v, 'A vertex cannot be linked to itself.')
        adj = list(self.__adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph._trusted(self.__n, adj)

    def without_edge(self, u, v):
        """Return a copy of the graph without the edge uv.

        :raises VertexMembershipError: if u or v does not belong to the graph.
        :raises EdgeError: if uv is not an edge.
        """
        if not self.adjacent(u, v):
            raise EdgeError(u, v, 'The edge does not belong to the graph.')
        adj = list(self.__adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph._trusted(self.__n, adj)

    def with_neighborhood(self, u, vertices):
        """Return a copy of the graph where the neighborhood of u is exactly the given vertex set.

        Every other adjacency not involving u is unchanged.

        :raises VertexMembershipError: if u or a vertex of the set does not belong to the graph.
        :raises EdgeError: if u belongs to the set.
        """
        self._check_vertex(u)
        bits = self.vertex_set(vertices)
        if bits >> u & 1:
            raise EdgeError(u, u, 'A vertex cannot be linked to itself.')
        adj = list(self.__adj)
        for w in iter_bits(adj[u]):
            adj[w] &= ~(1 << u)
        adj[u] = bits
        for w in iter_bits(bits):
            adj[w] |= 1 << u
        return Graph._trusted(self.__n, adj)

    def induced_subgraph(self, vertices):
        """Return the subgraph induced by the vertex set and the relabeling map.

        The vertices of the new graph are 0, ..., |S| - 1; the i-th one is the i-th smallest vertex of S.

        :param vertices: a vertex set (iterable or bitset).
        :return: a pair (subgraph, labels) where labels[i] is the vertex of this graph relabeled i.
        :raises VertexMembershipError: if a vertex does not belong to the graph.
        """
        bits = self.vertex_set(vertices)
        labels = tuple(iter_bits(bits))
        position = {v: i for i, v in enumerate(labels)}
        adj = []
        for v in labels:
            nv = 0
            for w in iter_bits(self.__adj[v] & bits):
                nv |= 1 << position[w]
            adj.append(nv)
        return Graph._trusted(len(labels), adj), labels

    def without_vertices(self, vertices):
        """Return the graph induced by all the vertices except the given ones, with its relabeling map."""
        full = (1 << self.__n) - 1
        return self.induced_subgraph(full & ~self.vertex_set(vertices))

    def __str__(self):
        return '\n'.join(' '.join('1' if self.__adj[u] >> v & 1 else '0' for v in self) for u in self)

    def __repr__(self):
        return 'Graph(n=' + str(self.__n) + ', m=' + str(self.__m) + ')'


def induced_subgraph(g, vertices):
    """Return the subgraph of g induced by vertices and the relabeling map. See `Graph.induced_subgraph`."""
    return g.induced_subgraph(vertices)


@dataclass(frozen=True)
class Partition:
    """Ordered vertex classes of a complete multipartite graph.

    The classes are tuples of vertices, pairwise disjoint, covering all the vertices. Some classes may be empty. The
    generators of `extremalgraph.graph.generators` produce the larger classes first, with contiguous labels.
    """

    classes: tuple

    @property
    def sizes(self):
        """Return the tuple of the sizes of the classes."""
        return tuple(len(c) for c in self.classes)

    def class_of(self, v):
        """Return the index of the class containing the vertex v."""
        for i, c in enumerate(self.classes):
            if v in c:
                return i
        raise VertexMembershipError(None, v)


def breadth_first_search(g, v, removed=0):
    """Return, for each vertex u reachable from v, the breadth first search distance from v to u in the graph g.

    The vertices of the bitset removed are ignored, as if they were deleted from g.

    :param g: a graph
    :param v: a vertex of g not in removed
    :param removed: a bitset of vertices to ignore
    :return: a dictionary associating for each reached vertex u the distance of a shortest path from v to u
    """
    dist = {v: 0}
    frontier = 1 << v
    seen = frontier | removed
    d = 0
    while frontier:
        d += 1
        reached = 0
        for u in iter_bits(frontier):
            reached |= g.adj[u]
        frontier = reached & ~seen
        seen |= frontier
        for u in iter_bits(frontier):
            dist[u] = d
    return dist


def component_masks(g, removed=0):
    """Return the bitsets of the connected components of g minus the vertices of removed, by smallest vertex."""
    left = ((1 << g.n) - 1) & ~removed
    comps = []
    while left:
        comp = left & -left
        frontier = comp
        while frontier:
            reached = 0
            for u in iter_bits(frontier):
                reached |= g.adj[u]
            frontier = reached & left & ~comp
            comp |= frontier
        comps.append(comp)
        left &= ~comp
    return comps


def connected_components(g, removed=0):
    """Return the connected components of g minus the vertices of removed, as sorted vertex tuples.

    The components are sorted by their smallest vertex.
    """
    return [tuple(iter_bits(c)) for c in component_masks(g, g.vertex_set(removed))]
