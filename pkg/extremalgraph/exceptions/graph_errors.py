"""Define all the exceptions that can occur while using the package.

There are two families of exceptions. The input errors, `InvalidParameterError` (with its specific
`VertexMembershipError` raised when a vertex index does not belong to the graph), `EdgeError` and `GraphParseError`,
are raised before any computation. The run errors, `CapacityError`, `InvalidMoveError` and `VerificationFailure`,
are raised when an exact computation cannot be done or when it disagrees with a closed formula.

All those exceptions are subclasses of the general class `GraphError`.
"""

__author__ = "Dimitri Watel"
__copyright__ = "Copyright 2018, extremalgraph"


class GraphError(Exception):
    """Error raised when working with graphs."""
    def __init__(self, msg, g=None):
        """Define a Graph error described with the message msg, optionally about the graph g."""
        self.graph = g
        self.message = msg if g is None else 'Graph ' + repr(g) + ' error: ' + msg
        super().__init__(self.message)


class InvalidParameterError(GraphError):
    """Error raised when a parameter is outside the domain of an operation."""
    def __init__(self, msg, g=None):
        super().__init__('Invalid parameter: ' + msg, g)


class VertexMembershipError(InvalidParameterError):
    """Error raised when a vertex is supposed to belong to a graph but is not."""
    def __init__(self, g, v):
        """Define a vertex membership error about the graph g and the vertex v."""
        self.vertex = v
        super().__init__('the vertex ' + str(v) + ' does not belong to the graph.', g)


class EdgeError(GraphError):
    """Error raised when an edge cannot be added to a simple graph (loop or duplicate)."""
    def __init__(self, u, v, msg):
        """Define an Edge error about the pair u, v described with the message msg."""
        self.edge = (u, v)
        super().__init__('Edge ' + str(u) + '--' + str(v) + ' error: ' + msg)


class GraphParseError(GraphError):
    """Error raised when an edge-list text cannot be read. The line is 1-based."""
    def __init__(self, line, msg):
        self.line = line
        super().__init__('Parse error at line ' + str(line) + ': ' + msg)


class CapacityError(GraphError):
    """Error raised when an exact computation is asked on an instance larger than its hard limit."""
    def __init__(self, what, size, limit):
        """Define a capacity error for the computation what asked with the given size over the given limit."""
        self.size = size
        self.limit = limit
        super().__init__('Capacity error: ' + what + ' supports at most ' + str(limit) + ' vertices, got ' +
                         str(size) + '.')


class InvalidMoveError(GraphError):
    """Error raised when a neighborhood replacement is asked on two adjacent vertices (or twice the same vertex)."""
    def __init__(self, g, u, v):
        self.vertices = (u, v)
        super().__init__('cannot replace the neighborhood of ' + str(u) + ' by the one of ' + str(v) +
                         ', the vertices must be distinct and non adjacent.', g)


class VerificationFailure(GraphError):
    """Error raised when an exhaustive computation disagrees with a closed formula.

    The failing cell is a tuple (n, k, s), the witness is a graph reaching the computed value.
    """
    def __init__(self, cell, expected, actual, witness=None):
        self.cell = cell
        self.expected = expected
        self.actual = actual
        self.witness = witness
        super().__init__('Verification failure at (n, k, s) = ' + str(cell) + ': formula gives ' + str(expected) +
                         ', exhaustive search gives ' + str(actual) + '.')
