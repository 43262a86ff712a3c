"""Closed-form edge counts of the extremal problem.

Provide t(n, k), the number of edges of the Turan graph T(n, k); g(n, k, s), the number of edges of G(n, k, s); the
maximum number of edges of a graph on n vertices with clique number at most k and matching number at most s, which is
t(n, k) for n <= 2s + 1 and the maximum of t(2s + 1, k) and g(n, k, s) otherwise; the Erdos-Gallai special case; and
the per-case bounds of the upper-bound argument, including f(b) = t(2s - b + 1, k) + b(n - 2s + b - 1).

All functions are pure and work on exact Python integers. The inputs are capped at MAX_ORDER so that every count fits
in a signed 64-bit integer, as the CSV and JSON outputs promise.
"""

from dataclasses import dataclass
from enum import Enum

from extremalgraph.exceptions.graph_errors import InvalidParameterError

__author__ = "Dimitri Watel"
__copyright__ = "Copyright 2018, extremalgraph"

MAX_ORDER = 2 ** 31
"""Largest accepted number of vertices (and matching bound)."""


class Winner(Enum):
    """Which construction reaches the maximum."""
    TURAN = 'TURAN'
    GKS = 'GKS'
    TIE = 'TIE'
    SMALL_N = 'SMALL_N'


@dataclass(frozen=True)
class ExtremalResult:
    """The maximum number of edges for (n, k, s) with the value of both constructions.

    In the SMALL_N regime (n <= 2s + 1), turan_branch is t(n, k) and gks_branch is None.
    """

    n: int
    k: int
    s: int
    turan_branch: int
    gks_branch: object
    value: int
    winner: Winner

    def to_dict(self):
        """Return the result as a dict with the keys of the `formula` command output, in that order."""
        return {'n': self.n, 'k': self.k, 's': self.s, 'turan_branch': self.turan_branch,
                'gks_branch': self.gks_branch, 'value': self.value, 'winner': self.winner.value}


def _check(name, x, minimum=0, maximum=None):
    if not isinstance(x, int) or isinstance(x, bool):
        raise TypeError()
    if x < minimum:
        raise InvalidParameterError(name + ' should be at least ' + str(minimum) + ', got ' + str(x) + '.')
    if maximum is not None and x > maximum:
        raise InvalidParameterError(name + ' should be at most ' + str(maximum) + ', got ' + str(x) + '.')


def _pairs(x):
    return x * (x - 1) // 2


def turan_edges(n, k):
    """Return t(n, k), the number of edges of the Turan graph T(n, k).

    With q = n // k and r = n % k, t(n, k) = C(n, 2) - r C(q + 1, 2) - (k - r) C(q, 2). For k >= n it is C(n, 2).

    :raises InvalidParameterError: if n < 0, n > MAX_ORDER or k < 1.
    """
    _check('n', n, 0, MAX_ORDER)
    _check('k', k, 1)
    if k >= n:
        return _pairs(n)
    q, r = divmod(n, k)
    return _pairs(n) - r * _pairs(q + 1) - (k - r) * _pairs(q)


def g_edges(n, k, s):
    """Return g(n, k, s) = t(s, k - 1) + s (n - s), the number of edges of G(n, k, s).

    :raises InvalidParameterError: if s > n, if a parameter is out of range or if k = 1 and s > 0.
    """
    _check('n', n, 0, MAX_ORDER)
    _check('k', k, 1)
    _check('s', s, 0, n)
    if k == 1:
        if s > 0:
            raise InvalidParameterError('G(n, 1, s) is undefined for s > 0.')
        return 0
    return turan_edges(s, k - 1) + s * (n - s)


def ex_edges(n, k, s):
    """Return the maximum number of edges of a graph on n vertices with clique number <= k and matching number <= s.

    For n <= 2s + 1 the maximum is t(n, k) (winner SMALL_N). Otherwise it is the maximum of t(2s + 1, k), reached by
    T(2s + 1, k) plus isolated vertices, and g(n, k, s), reached by G(n, k, s); for k = 1 both are 0.

    :rtype: ExtremalResult
    :raises InvalidParameterError: if n < 0, k < 1 or s < 0.
    """
    _check('n', n, 0, MAX_ORDER)
    _check('k', k, 1)
    _check('s', s, 0, MAX_ORDER)
    if n <= 2 * s + 1:
        t = turan_edges(n, k)
        return ExtremalResult(n, k, s, t, None, t, Winner.SMALL_N)
    t = turan_edges(2 * s + 1, k)
    g = g_edges(n, k, s) if k > 1 else 0
    if t > g:
        winner = Winner.TURAN
    elif g > t:
        winner = Winner.GKS
    else:
        winner = Winner.TIE
    return ExtremalResult(n, k, s, t, g, max(t, g), winner)


def erdos_gallai_edges(n, s):
    """Return the maximum number of edges of a graph on n vertices with matching number at most s.

    This is `ex_edges` with a vacuous clique bound; for n >= 2s + 1 it equals max(C(2s + 1, 2), C(s, 2) + s(n - s)).
    """
    return ex_edges(n, max(n, 1), s).value


def case4_f(n, k, s, b):
    """Return f(b) = t(2s - b + 1, k) + b (n - 2s + b - 1).

    :raises InvalidParameterError: unless 0 <= b <= s, n >= 2s + 1 and k >= 1.
    """
    _check('s', s, 0, MAX_ORDER)
    _check('n', n, 2 * s + 1, MAX_ORDER)
    _check('k', k, 1)
    _check('b', b, 0, s)
    return turan_edges(2 * s - b + 1, k) + b * (n - 2 * s + b - 1)


def case_of(n, k, s, b):
    """Return the case (1 to 4) of the upper-bound argument for a Tutte-Berge set of size b.

    The largest odd component then has 2s - 2b + 1 vertices and the others are single vertices. With
    m = s // (k - 1): Case 1 is b = 0, Case 2 is b = s, Case 3 is 2s - b + 1 <= s + m and Case 4 is the rest.

    :raises InvalidParameterError: unless k >= 2, 0 <= b <= s and n >= 2s + 1.
    """
    _check('k', k, 2)
    _check('s', s, 0, MAX_ORDER)
    _check('n', n, 2 * s + 1, MAX_ORDER)
    _check('b', b, 0, s)
    if b == 0:
        return 1
    if b == s:
        return 2
    if 2 * s - b + 1 <= s + s // (k - 1):
        return 3
    return 4


def case_bound(n, k, s, b):
    """Return the edge bound of the case of `case_of(n, k, s, b)`.

    Case 1 gives t(2s + 1, k); Cases 2 and 3 give t(s + m, k) + s (n - s - m) with m = s // (k - 1), which equals
    g(n, k, s); Case 4 gives f(b).
    """
    case = case_of(n, k, s, b)
    if case == 1:
        return turan_edges(2 * s + 1, k)
    if case == 4:
        return case4_f(n, k, s, b)
    m = s // (k - 1)
    return turan_edges(s + m, k) + s * (n - s - m)


def gks_crossover(k, s):
    """Return the smallest n >= 2s + 2 for which G(n, k, s) has strictly more edges than T(2s + 1, k).

    Return None when no such n exists, that is when s = 0 or k = 1 (both constructions then have no edge).
    """
    _check('k', k, 1)
    _check('s', s, 0, MAX_ORDER)
    if s == 0 or k == 1:
        return None
    gap = turan_edges(2 * s + 1, k) - turan_edges(s, k - 1)
    return max(2 * s + 2, s + gap // s + 1)
