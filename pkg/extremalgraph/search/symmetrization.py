"""Neighborhood replacement moves.

Replacing the neighborhood of a vertex u by the one of a non adjacent vertex v changes the number of edges by
d(v) - d(u) and never increases the clique number: a new clique contains u, hence not v, and exchanging u for v gives
a clique of the same size in the original graph. When u and v both belong to a Tutte-Berge set B, the graph G - B is
unchanged, so B still certifies the same bound on the matching number.

Applied to B until no move increases the number of edges, the moves make the non-adjacency relation on B an
equivalence relation: the graph induced by B becomes complete multipartite.
"""

from pubsub import pub

from extremalgraph import events
from extremalgraph.exceptions.graph_errors import InvalidMoveError, InvalidParameterError
from extremalgraph.graph.graph import Graph
from extremalgraph.invariants.clique import clique_number
from extremalgraph.invariants.structure import is_witness_for

__author__ = "Dimitri Watel"
__copyright__ = "Copyright 2018, extremalgraph"


def replace_neighborhood(g, u, v):
    """Return a copy of g where the neighborhood of u is the neighborhood of v.

    u and v become non adjacent twins and the number of edges becomes m - d(u) + d(v).

    :raises VertexMembershipError: if u or v does not belong to g.
    :raises InvalidMoveError: if u = v or u and v are adjacent.
    """
    if not isinstance(g, Graph):
        raise TypeError()
    if u == v or g.adjacent(u, v):
        raise InvalidMoveError(g, u, v)
    return g.with_neighborhood(u, g.adj[v])


def clique_safe(g, u, v):
    """Return True if replacing the neighborhood of u by the one of v does not increase the clique number.

    Both clique numbers are computed exactly; the answer is always True.
    """
    return clique_number(replace_neighborhood(g, u, v))[0] <= clique_number(g)[0]


def _single_move(g, vertices):
    """Return the lexicographically first non adjacent pair (u, v) of vertices with d(u) < d(v), or None."""
    for i, u in enumerate(vertices):
        du = g.degree(u)
        for v in vertices[i + 1:]:
            if g.adj[u] >> v & 1:
                continue
            dv = g.degree(v)
            if du < dv:
                return u, v
            if dv < du:
                return v, u
    return None


def find_transitivity_violation(g, vertices):
    """Return the lexicographically first triple (u, v, w) of the vertex set, v < w, where uv and uw are non-edges
    and vw is an edge, or None if non-adjacency is transitive on the set.
    """
    vertices = sorted(vertices)
    for u in vertices:
        others = [x for x in vertices if x != u and not g.adj[u] >> x & 1]
        for i, v in enumerate(others):
            for w in others[i + 1:]:
                if g.adj[v] >> w & 1:
                    return u, v, w
    return None


def double_replacement(g, u, v, w):
    """Return a copy of g where the neighborhoods of v and w are both replaced by the one of u.

    When uv and uw are non-edges and vw is an edge, the number of edges becomes m + 2d(u) - d(v) - d(w) + 1, so it
    strictly increases when d(u) >= d(v) and d(u) >= d(w).

    :raises InvalidMoveError: if u is adjacent to v or to w, or if the three vertices are not distinct.
    """
    if v == w:
        raise InvalidMoveError(g, v, w)
    return replace_neighborhood(replace_neighborhood(g, v, u), w, u)


def symmetrize_within(g, witness):
    """Apply neighborhood replacements inside the set B of a Tutte-Berge witness until a fixpoint is reached.

    Repeatedly, the first non adjacent pair (u, v) of B in lexicographic order with d(u) < d(v) is replaced by
    replace_neighborhood(g, u, v). When no such pair is left, every non adjacent pair of B has the same degree and the
    first transitivity violation (u, v, w) of B, if any, is removed with `double_replacement`. Every move strictly
    increases the number of edges, and G - B never changes, so the witness stays valid for the result.

    A message is published on `events.SEARCH_MOVE` for each move.

    :param witness: a `TutteBergeWitness` of g.
    :raises InvalidParameterError: if witness does not describe the components of g - B.
    """
    if not is_witness_for(g, witness):
        raise InvalidParameterError('the Tutte-Berge witness does not match the graph.', g)
    vertices = list(witness.B)
    while True:
        move = _single_move(g, vertices)
        if move is not None:
            g = replace_neighborhood(g, *move)
            pub.sendMessage(events.SEARCH_MOVE, kind='replace', vertices=move, edges=g.m)
            continue
        violation = find_transitivity_violation(g, vertices)
        if violation is None:
            return g
        g = double_replacement(g, *violation)
        pub.sendMessage(events.SEARCH_MOVE, kind='double_replace', vertices=violation, edges=g.m)
