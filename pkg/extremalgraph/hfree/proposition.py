"""Color-critical forbidden graphs and the H-free version of the extremal problem.

A graph H is color-critical if deleting some edge decreases its chromatic number. For such an H with chromatic number
k + 1 > 2, the graph G(n, k, s) is k-colorable, hence H-free, and its matching number is at most s; so g(n, k, s) is a
lower bound on the maximum number of edges of an H-free graph on n vertices with matching number at most s, and that
maximum is g(n, k, s) once s and n are large enough. `verify_proposition` compares the exact maximum, computed by
`extremal.oracle.hfree_oracle`, with g(n, k, s).
"""

from dataclasses import dataclass
from enum import Enum

from extremalgraph.exceptions.graph_errors import InvalidParameterError
from extremalgraph.extremal.formulas import g_edges
from extremalgraph.extremal.oracle import hfree_oracle
from extremalgraph.graph.graph import Graph
from extremalgraph.hfree.coloring import chromatic_number

__author__ = "Dimitri Watel"
__copyright__ = "Copyright 2018, extremalgraph"


@dataclass(frozen=True)
class ForbiddenPattern:
    """A forbidden graph H with its chromatic number chi, its criticality and the clique-like bound k = chi - 1.

    edge is an edge whose deletion decreases the chromatic number (the lexicographically first one), or None.
    """

    H: Graph
    chi: int
    critical: bool
    edge: object

    @property
    def k(self):
        return self.chi - 1

    def to_dict(self):
        return {'n': self.H.n, 'm': self.H.m, 'chi': self.chi, 'critical': self.critical,
                'critical_edge': None if self.edge is None else list(self.edge), 'k': self.k}


class Verdict(Enum):
    """Comparison of the exhaustive H-free maximum with g(n, k, s)."""
    EQUAL = 'EQUAL'
    ORACLE_LARGER = 'ORACLE_LARGER'
    ORACLE_SMALLER = 'ORACLE_SMALLER'


@dataclass(frozen=True)
class PropositionReport:
    """Result of `verify_proposition`.

    ORACLE_LARGER is expected while s or n are too small; ORACLE_SMALLER would contradict the construction.
    """

    pattern: ForbiddenPattern
    n: int
    s: int
    oracle_value: int
    gks_value: int
    witness: Graph

    @property
    def verdict(self):
        if self.oracle_value == self.gks_value:
            return Verdict.EQUAL
        if self.oracle_value > self.gks_value:
            return Verdict.ORACLE_LARGER
        return Verdict.ORACLE_SMALLER

    def to_dict(self):
        return {'n': self.n, 's': self.s, 'k': self.pattern.k, 'oracle_value': self.oracle_value,
                'gks_value': self.gks_value, 'verdict': self.verdict.value}


def is_color_critical(h):
    """Return the pair (critical, edge): whether deleting some edge of h decreases its chromatic number, and the
    lexicographically first such edge (None if h is not color-critical).

    :raises InvalidParameterError: if h has no edge.
    :raises CapacityError: if h is too large for `chromatic_number`.
    """
    if not isinstance(h, Graph):
        raise TypeError()
    if h.m == 0:
        raise InvalidParameterError('color-criticality needs a graph with at least one edge.', h)
    chi = chromatic_number(h)
    for u, v in h.edges:
        if chromatic_number(h.without_edge(u, v)) < chi:
            return True, (u, v)
    return False, None


def forbidden_pattern(h):
    """Return the `ForbiddenPattern` of h."""
    critical, edge = is_color_critical(h)
    return ForbiddenPattern(h, chromatic_number(h), critical, edge)


def verify_proposition(h, n, s, thread_hint=1):
    """Compare the maximum number of edges of an H-free graph on n vertices with matching number at most s with
    g(n, k, s), where k + 1 is the chromatic number of h.

    :param h: a connected color-critical graph with chromatic number at least 3.
    :return: a `PropositionReport`.
    :raises InvalidParameterError: if h is not color-critical, if its chromatic number is at most 2 or if s > n.
    :raises CapacityError: if n or h is too large for `hfree_oracle`.
    """
    pattern = forbidden_pattern(h)
    if not pattern.critical:
        raise InvalidParameterError('the forbidden graph is not color-critical.', h)
    if pattern.chi <= 2:
        raise InvalidParameterError('the forbidden graph should have chromatic number at least 3, got ' +
                                    str(pattern.chi) + '.', h)
    gks = g_edges(n, pattern.k, s)
    value, witness = hfree_oracle(n, h, s, thread_hint, with_witness=True)
    return PropositionReport(pattern, n, s, value, gks, witness)
