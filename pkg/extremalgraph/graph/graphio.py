"""Read and write graphs in the edge-list text format.

The format is the only graph interchange format of the package:
- the first line is "n m", two decimal integers separated by a single space;
- then exactly m lines "u v" with 0 <= u < v < n, in ascending lexicographic order;
- every line ends with a newline (a missing newline after the last line is tolerated when reading);
- no comment and no blank line.
"""

import re
import sys

from extremalgraph.exceptions.graph_errors import GraphParseError, InvalidParameterError
from extremalgraph.graph.graph import MAX_VERTICES, Graph

__author__ = "Dimitri Watel"
__copyright__ = "Copyright 2018, extremalgraph"

_LINE = re.compile(r'^(0|[1-9]\d*) (0|[1-9]\d*)$')


def write_graph(g):
    """Return the edge-list text of the graph g."""
    lines = [str(g.n) + ' ' + str(g.m)]
    lines.extend(str(u) + ' ' + str(v) for u, v in g.edges)
    return '\n'.join(lines) + '\n'


def parse_graph(text):
    """Return the graph described by an edge-list text.

    :param text: the content of an edge-list file.
    :raises GraphParseError: on a malformed line, a loop, a duplicate edge, a vertex index >= n, edges out of order
    or a wrong number of edge lines. The error carries the 1-based line number.
    """
    lines = text.split('\n')
    if len(lines) > 1 and lines[-1] == '':
        lines.pop()
    header = _LINE.match(lines[0])
    if header is None:
        raise GraphParseError(1, 'malformed header ' + repr(lines[0]) + ', expected "n m".')
    n, m = int(header.group(1)), int(header.group(2))
    if n > MAX_VERTICES:
        raise GraphParseError(1, 'at most ' + str(MAX_VERTICES) + ' vertices are supported, got ' + str(n) + '.')
    if len(lines) - 1 < m:
        raise GraphParseError(len(lines) + 1, 'expected ' + str(m) + ' edge lines, got ' + str(len(lines) - 1) + '.')
    if len(lines) - 1 > m:
        raise GraphParseError(m + 2, 'unexpected line after the ' + str(m) + ' edge lines.')
    adj = [0] * n
    previous = None
    for number, line in enumerate(lines[1:], start=2):
        match = _LINE.match(line)
        if match is None:
            raise GraphParseError(number, 'malformed edge line ' + repr(line) + ', expected "u v".')
        u, v = int(match.group(1)), int(match.group(2))
        if u >= n or v >= n:
            raise GraphParseError(number, 'vertex index ' + str(max(u, v)) + ' is not below n = ' + str(n) + '.')
        if u == v:
            raise GraphParseError(number, 'loop on vertex ' + str(u) + '.')
        if u > v:
            raise GraphParseError(number, 'the extremities should satisfy u < v, got ' + line + '.')
        if previous == (u, v):
            raise GraphParseError(number, 'duplicate edge ' + line + '.')
        if previous is not None and (u, v) < previous:
            raise GraphParseError(number, 'edges are not in ascending lexicographic order.')
        previous = (u, v)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph._trusted(n, adj)


def _decode(data):
    """Return the text of the bytes data; a byte that is not UTF-8 is a parse error on its line."""
    try:
        return data.decode('utf-8')
    except UnicodeDecodeError as e:
        raise GraphParseError(data[:e.start].count(b'\n') + 1, 'invalid byte ' + hex(data[e.start]) + '.')


def read_graph(path):
    """Return the graph stored in the file at path; the path '-' reads the standard input.

    :raises GraphParseError: if the content is not a valid edge-list text (including non UTF-8 bytes).
    :raises InvalidParameterError: if the file cannot be read.
    """
    if path == '-':
        if hasattr(sys.stdin, 'buffer'):
            return parse_graph(_decode(sys.stdin.buffer.read()))
        return parse_graph(sys.stdin.read())
    try:
        with open(path, 'rb') as f:
            data = f.read()
    except OSError as e:
        raise InvalidParameterError('cannot read ' + str(path) + ': ' + str(e) + '.')
    return parse_graph(_decode(data))


def save_graph(g, path):
    """Write the edge-list text of g in the file at path; the path '-' writes on the standard output.

    :raises InvalidParameterError: if the file cannot be written.
    """
    if path == '-':
        sys.stdout.write(write_graph(g))
        return
    try:
        with open(path, 'w', newline='\n') as f:
            f.write(write_graph(g))
    except OSError as e:
        raise InvalidParameterError('cannot write ' + str(path) + ': ' + str(e) + '.')
