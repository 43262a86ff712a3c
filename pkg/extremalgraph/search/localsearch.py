"""A local search for graphs with many edges, clique number at most k and matching number at most s.

Each restart starts from one of the two extremal constructions, G(n, k, s) or the Turan graph T(min(n, 2s + 1), k)
padded with isolated vertices, alternately. Restart 0 keeps its start as is; the others perturb it with random edge
deletions and insertions. Then every iteration
- deletes a random edge,
- symmetrizes the graph inside the set A of its Gallai-Edmonds partition (`symmetrization.symmetrize_within`),
- tries r random edge insertions,
- adds, in lexicographic order, every non-edge that keeps both bounds,
and the result replaces the current graph if it has at least as many edges. Every graph kept is checked again with the
exact clique search and the blossom algorithm.

The whole search is determined by the seed: restart i draws its own seed from `random.Random(seed)`.
"""

import random
from dataclasses import dataclass, field

from pubsub import pub

from extremalgraph import events
from extremalgraph.exceptions.graph_errors import InvalidParameterError
from extremalgraph.extremal.formulas import ex_edges
from extremalgraph.graph.generators import make_gks, make_turan, pad_graph
from extremalgraph.invariants.clique import is_k_clique_free
from extremalgraph.invariants.matching import matching_number
from extremalgraph.invariants.structure import gallai_edmonds_witness
from extremalgraph.search.symmetrization import symmetrize_within

__author__ = "Dimitri Watel"
__copyright__ = "Copyright 2018, extremalgraph"

DEFAULT_RESTARTS = 50
"""Default number of restarts."""

DEFAULT_ITERATIONS = 20
"""Default number of iterations per restart."""


@dataclass
class SearchState:
    """A graph with clique number at most k and matching number at most s.

    witness_B is a `TutteBergeWitness` of the graph (None until computed) and history the list of the moves that led
    to the graph from its start, as (kind, vertices) pairs.
    """

    graph: object
    k: int
    s: int
    witness_B: object = None
    history: list = field(default_factory=list)

    @property
    def edges(self):
        return self.graph.m


@dataclass(frozen=True)
class RestartReport:
    """The best edge count of one restart, compared with the closed formula."""

    restart_id: int
    seed: int
    best_edges: int
    formula_value: int

    @property
    def match(self):
        return self.best_edges == self.formula_value


@dataclass(frozen=True)
class SearchResult:
    """The best state over all the restarts and one report per restart."""

    best: SearchState
    restarts: tuple
    formula_value: int

    def csv_rows(self):
        """Return the rows 'restart_id,seed,best_edges,formula_value,match', header first."""
        rows = [('restart_id', 'seed', 'best_edges', 'formula_value', 'match')]
        for r in self.restarts:
            rows.append((r.restart_id, r.seed, r.best_edges, r.formula_value, str(r.match).lower()))
        return rows


def _admissible(g, k, s):
    return is_k_clique_free(g, k) and matching_number(g)[0] <= s


def _better(g, best):
    return best is None or g.m > best.m or (g.m == best.m and g.edge_mask() < best.edge_mask())


class _Restart:
    """One restart: the current state, the best one met and the random generator."""

    def __init__(self, start, k, s, rng):
        self.k = k
        self.s = s
        self.rng = rng
        self.current = start
        self.history = []
        self.best = start
        self.best_history = []

    def _record(self, kind, vertices, g):
        self.history.append((kind, tuple(vertices)))
        pub.sendMessage(events.SEARCH_MOVE, kind=kind, vertices=tuple(vertices), edges=g.m)

    def _keep_best(self):
        if _better(self.current, self.best):
            self.best = self.current
            self.best_history = list(self.history)

    def delete_random_edge(self, g):
        edges = list(g.edges)
        if not edges:
            return g
        u, v = self.rng.choice(edges)
        g = g.without_edge(u, v)
        self._record('delete', (u, v), g)
        return g

    def add_random_edges(self, g, attempts):
        for _ in range(attempts):
            non_edges = list(g.non_edges())
            if not non_edges:
                return g
            u, v = self.rng.choice(non_edges)
            candidate = g.with_edge(u, v)
            if _admissible(candidate, self.k, self.s):
                g = candidate
                self._record('add', (u, v), g)
        return g

    def add_greedily(self, g):
        for u, v in list(g.non_edges()):
            candidate = g.with_edge(u, v)
            if _admissible(candidate, self.k, self.s):
                g = candidate
                self._record('greedy_add', (u, v), g)
        return g

    def symmetrize(self, g):
        witness = gallai_edmonds_witness(g)
        candidate = symmetrize_within(g, witness)
        if candidate != g and _admissible(candidate, self.k, self.s):
            self._record('symmetrize', witness.B, candidate)
            return candidate
        return g

    def perturb(self, deletions, insertions):
        g = self.current
        for _ in range(deletions):
            g = self.delete_random_edge(g)
        self.current = self.add_random_edges(g, insertions)

    def iterate(self, readditions):
        saved = len(self.history)
        g = self.delete_random_edge(self.current)
        g = self.symmetrize(g)
        g = self.add_random_edges(g, readditions)
        g = self.add_greedily(g)
        if g.m >= self.current.m and _admissible(g, self.k, self.s):
            self.current = g
            self._keep_best()
        else:
            del self.history[saved:]


def _check(name, x, minimum):
    if not isinstance(x, int) or isinstance(x, bool):
        raise TypeError()
    if x < minimum:
        raise InvalidParameterError(name + ' should be at least ' + str(minimum) + ', got ' + str(x) + '.')


def local_search(n, k, s, seed=0, iters=DEFAULT_ITERATIONS, restarts=DEFAULT_RESTARTS, readditions=None):
    """Search a graph on n vertices with clique number at most k, matching number at most s and many edges.

    A message is published on `events.SEARCH_RESTART` at the end of each restart, and on `events.SEARCH_MOVE` for
    each move.

    :param seed: the seed of the whole search.
    :param iters: number of iterations per restart.
    :param restarts: number of restarts, at least 1.
    :param readditions: number of random insertions per iteration, 2n if None.
    :return: a `SearchResult`; its best state has the most edges, then the smallest edge-bitmask.
    :raises InvalidParameterError: if n < 1, k < 1, s < 0, iters < 0 or restarts < 1.
    """
    _check('n', n, 1)
    _check('k', k, 1)
    _check('s', s, 0)
    _check('iters', iters, 0)
    _check('restarts', restarts, 1)
    r = 2 * n if readditions is None else readditions
    _check('readditions', r, 0)
    s_eff = 0 if k == 1 else min(s, n // 2)
    formula_value = ex_edges(n, k, s).value
    gks = make_gks(n, k, s_eff)[0]
    turan = pad_graph(make_turan(min(n, 2 * s_eff + 1), k)[0], n)
    seeds = random.Random(seed)
    best = None
    reports = []
    for restart_id in range(restarts):
        sub_seed = seeds.getrandbits(64)
        start = turan if restart_id % 2 == 1 else gks
        run = _Restart(start, k, s_eff, random.Random(sub_seed))
        if restart_id > 0:
            run.perturb(n // 2 + 1, n)
            run._keep_best()
        for _ in range(iters):
            run.iterate(r)
        reports.append(RestartReport(restart_id, sub_seed, run.best.m, formula_value))
        pub.sendMessage(events.SEARCH_RESTART, restart_id=restart_id, seed=sub_seed, best_edges=run.best.m,
                        formula_value=formula_value)
        if best is None or _better(run.best, best[0]):
            best = (run.best, run.best_history)
    graph, history = best
    state = SearchState(graph, k, s, gallai_edmonds_witness(graph), history)
    return SearchResult(state, tuple(reports), formula_value)
