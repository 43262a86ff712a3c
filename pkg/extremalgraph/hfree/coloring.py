"""Exact vertex colorings of small graphs."""

from extremalgraph.exceptions.graph_errors import CapacityError, InvalidParameterError
from extremalgraph.graph.graph import Graph
from extremalgraph.invariants.clique import clique_number

__author__ = "Dimitri Watel"
__copyright__ = "Copyright 2018, extremalgraph"

CHROMATIC_MAX_VERTICES = 16
"""Maximum number of vertices of the exact coloring search."""


def coloring(g, c):
    """Return a proper coloring of g with colors 0, ..., c - 1 as a tuple indexed by the vertices, or None.

    The vertices are colored by nonincreasing degree; a vertex never opens a color with an index larger than the
    number of colors already used, so that no coloring is explored twice up to a permutation of the colors.

    :raises CapacityError: if g has more than CHROMATIC_MAX_VERTICES vertices.
    :raises InvalidParameterError: if c is negative.
    """
    if not isinstance(g, Graph):
        raise TypeError()
    if g.n > CHROMATIC_MAX_VERTICES:
        raise CapacityError('the exact coloring', g.n, CHROMATIC_MAX_VERTICES)
    if c < 0:
        raise InvalidParameterError('the number of colors should be nonnegative, got ' + str(c) + '.')
    order = sorted(g, key=lambda v: (-g.degree(v), v))
    colors = [-1] * g.n

    def assign(i, used):
        if i == g.n:
            return True
        v = order[i]
        forbidden = 0
        for w in g.neighbors(v):
            if colors[w] >= 0:
                forbidden |= 1 << colors[w]
        for color in range(min(used + 1, c)):
            if not forbidden >> color & 1:
                colors[v] = color
                if assign(i + 1, max(used, color + 1)):
                    return True
        colors[v] = -1
        return False

    if not assign(0, 0):
        return None
    return tuple(colors)


def chromatic_number(g):
    """Return the chromatic number of g; the graph with no vertex has chromatic number 0.

    The number of colors is increased from the clique number, a lower bound, until a coloring exists.

    :raises CapacityError: if g has more than CHROMATIC_MAX_VERTICES vertices.
    """
    if not isinstance(g, Graph):
        raise TypeError()
    if g.n > CHROMATIC_MAX_VERTICES:
        raise CapacityError('the chromatic number', g.n, CHROMATIC_MAX_VERTICES)
    if g.n == 0:
        return 0
    c = max(1, clique_number(g)[0])
    while coloring(g, c) is None:
        c += 1
    return c
