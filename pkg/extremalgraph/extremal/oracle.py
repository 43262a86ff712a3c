"""Exhaustive ground truth on small vertex counts.

`enumerate_oracle` visits every labeled graph on n <= 8 vertices once, as the edge-bitmasks 0 .. 2^C(n, 2) - 1,
computes its edge count m, clique number omega and matching number nu, and keeps for each (omega, nu) the largest m
with the smallest bitmask reaching it. A prefix maximum over increasing k and s then gives, for every cell (k, s), the
maximum number of edges of a graph with clique number <= k and matching number <= s.

The bitmask range is cut into contiguous chunks. Each chunk is scanned independently (in a `multiprocessing.Pool`
when more than one worker is asked), and the chunk tables are merged cell by cell: the largest m wins, then the
smallest bitmask. The merge is associative and commutative, so the table does not depend on the number of workers.

`verify_theorem` compares every cell with the formula of `extremal.formulas.ex_edges`, and `hfree_oracle` computes the
H-free analogue for a forbidden graph H.
"""

import csv
from dataclasses import dataclass
from multiprocessing import Pool

from pubsub import pub

from extremalgraph import events
from extremalgraph.exceptions.graph_errors import CapacityError, InvalidParameterError, VerificationFailure
from extremalgraph.extremal.formulas import ex_edges
from extremalgraph.extremal.kernels import EdgeTable, clique_size, invariant_floors, matching_at_least, \
    matching_size
from extremalgraph.graph.graph import Graph, component_masks
from extremalgraph.hfree.containment import contains_subgraph

__author__ = "Dimitri Watel"
__copyright__ = "Copyright 2018, extremalgraph"

ORACLE_MAX_VERTICES = 8
"""Maximum number of vertices of the exhaustive enumeration (2^28 graphs for n = 8)."""

ORACLE_PATTERN_MAX_VERTICES = 8
"""Maximum number of vertices of a forbidden graph H in `hfree_oracle`."""

CHUNK_BITS = 14
"""Each enumeration chunk holds 2^CHUNK_BITS consecutive bitmasks."""

PRUNE_REFRESH = 4096
"""Number of bitmasks between two refreshes of the pruning floors inside a chunk."""


@dataclass(frozen=True)
class OracleTable:
    """Maximum edge counts for every (k, s), 1 <= k <= n, 0 <= s <= n // 2, with a witness edge-bitmask per cell."""

    n: int
    max_edges: dict
    witness: dict

    def cell(self, k, s):
        """Return the maximum edge count of the cell (k, s); larger k or s are clamped to the table."""
        return self.max_edges[(min(k, self.n), min(s, self.n // 2))]

    def witness_graph(self, k, s):
        """Return a graph reaching the cell (k, s)."""
        return Graph.from_edge_mask(self.n, self.witness[(min(k, self.n), min(s, self.n // 2))])


@dataclass(frozen=True)
class CellReport:
    """One row of a verification report."""

    n: int
    k: int
    s: int
    max_edges: int
    formula: int
    turan_branch: int
    gks_branch: object
    witness: int

    @property
    def passed(self):
        return self.max_edges == self.formula

    @property
    def status(self):
        return 'PASS' if self.passed else 'FAIL'


@dataclass(frozen=True)
class VerificationReport:
    """All the cells checked by `verify_theorem`, in increasing (n, k, s) order."""

    n_max: int
    cells: tuple

    @property
    def passed(self):
        return all(c.passed for c in self.cells)

    @property
    def failures(self):
        return tuple(c for c in self.cells if not c.passed)


def _better(candidate, current):
    """Return True if the (m, mask) candidate beats current: larger m, then smaller mask."""
    return current is None or candidate[0] > current[0] or (candidate[0] == current[0] and candidate[1] < current[1])


def _merge(into, raw):
    for key, value in raw.items():
        if _better(value, into.get(key)):
            into[key] = value


def _prefix(n, raw):
    """Return the prefix-maximum table {(k, s): (m, mask)} of a raw {(omega, nu): (m, mask)} table."""
    table = {}
    for k in range(1, n + 1):
        for s in range(n // 2 + 1):
            best = raw.get((k, s))
            for previous in (table.get((k - 1, s)), table.get((k, s - 1))):
                if previous is not None and _better(previous, best):
                    best = previous
            table[(k, s)] = best
    return table


def _scan_chunk(args):
    """Scan the bitmasks of [start, end) and return the raw table {(omega, nu): (m, mask)}."""
    n, start, end, prune = args
    edges = EdgeTable(n)
    full = edges.full
    raw = {}
    floors = invariant_floors(n) if prune else None
    floor_by_m = [-1] * (edges.nb_pairs + 1)
    next_refresh = start
    for mask in range(start, end):
        m = mask.bit_count()
        if prune:
            if mask >= next_refresh:
                prefix = _prefix(n, raw)
                floor_by_m = [-1 if prefix[fl] is None else prefix[fl][0]
                              for fl in ((min(k, n), min(s, n // 2)) for k, s in floors)]
                next_refresh = mask + PRUNE_REFRESH
            if m < floor_by_m[m]:
                continue
        adj = edges.adjacency(mask)
        key = (clique_size(adj, full), matching_size(adj, full))
        current = raw.get(key)
        if current is None or m > current[0]:
            raw[key] = (m, mask)
    return raw


def _chunks(n, chunk_bits):
    total = 1 << (n * (n - 1) // 2)
    size = 1 << min(chunk_bits, n * (n - 1) // 2)
    return [(start, min(start + size, total)) for start in range(0, total, size)]


def _run(worker, tasks, thread_hint):
    """Yield the worker results in task order, in a process pool if thread_hint > 1."""
    if thread_hint <= 1 or len(tasks) == 1:
        for task in tasks:
            yield worker(task)
        return
    with Pool(thread_hint) as pool:
        for result in pool.imap(worker, tasks):
            yield result


def _check_order(n, limit=ORACLE_MAX_VERTICES):
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError()
    if n < 1:
        raise InvalidParameterError('the enumeration needs at least 1 vertex, got ' + str(n) + '.')
    if n > limit:
        raise CapacityError('the exhaustive enumeration', n, limit)


def enumerate_oracle(n, thread_hint=1, prune=True, chunk_bits=None):
    """Return the `OracleTable` of all the graphs on n vertices.

    A message is published on `events.ORACLE_CHUNK` after each merged chunk.

    :param n: the number of vertices, 1 <= n <= ORACLE_MAX_VERTICES (n = 8 takes hours).
    :param thread_hint: number of worker processes.
    :param prune: skip the invariants of a graph whose edge count m is below the current best of the cell given by
    the lower bounds on omega and nu implied by m alone. It never changes the table.
    :param chunk_bits: log2 of the chunk size, CHUNK_BITS if None.
    :raises CapacityError: if n > ORACLE_MAX_VERTICES.
    """
    _check_order(n)
    tasks = [(n, start, end, prune) for start, end in _chunks(n, CHUNK_BITS if chunk_bits is None else chunk_bits)]
    raw = {}
    for done, chunk in enumerate(_run(_scan_chunk, tasks, thread_hint), start=1):
        _merge(raw, chunk)
        pub.sendMessage(events.ORACLE_CHUNK, n=n, done=done, total=len(tasks))
    table = _prefix(n, raw)
    return OracleTable(n, {key: value[0] for key, value in table.items()},
                       {key: value[1] for key, value in table.items()})


def verify_theorem(n_max, thread_hint=1, formula=ex_edges, strict=False, prune=True):
    """Compare the oracle table with the formula for every 1 <= n <= n_max, 1 <= k <= n, 0 <= s <= n // 2.

    A message is published on `events.ORACLE_CELL` for each cell.

    :param formula: a function (n, k, s) -> `ExtremalResult`, `ex_edges` by default.
    :param strict: if True, raise on the first failing cell instead of returning the report.
    :return: the `VerificationReport`.
    :raises CapacityError: if n_max > ORACLE_MAX_VERTICES.
    :raises VerificationFailure: if strict and a cell differs from the formula; it carries the witness graph.
    """
    _check_order(n_max)
    cells = []
    for n in range(1, n_max + 1):
        table = enumerate_oracle(n, thread_hint, prune)
        for k in range(1, n + 1):
            for s in range(n // 2 + 1):
                result = formula(n, k, s)
                report = CellReport(n, k, s, table.cell(k, s), result.value, result.turan_branch,
                                    result.gks_branch, table.witness[(k, s)])
                pub.sendMessage(events.ORACLE_CELL, n=n, k=k, s=s, expected=report.formula,
                                actual=report.max_edges, passed=report.passed)
                if strict and not report.passed:
                    raise VerificationFailure((n, k, s), report.formula, report.max_edges,
                                              table.witness_graph(k, s))
                cells.append(report)
    return VerificationReport(n_max, tuple(cells))


CSV_HEADER = ('n', 'k', 's', 'max_edges', 'formula', 'turan_branch', 'gks_branch', 'status')


def write_table_csv(report, stream):
    """Write the verification report as CSV on the text stream; an undefined branch is an empty field."""
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(CSV_HEADER)
    for c in report.cells:
        writer.writerow((c.n, c.k, c.s, c.max_edges, c.formula, c.turan_branch,
                         '' if c.gks_branch is None else c.gks_branch, c.status))


def _check_pattern(h):
    if not isinstance(h, Graph):
        raise TypeError()
    if h.n < 2:
        raise InvalidParameterError('the forbidden graph should have at least 2 vertices.')
    if h.n > ORACLE_PATTERN_MAX_VERTICES:
        raise CapacityError('the H-free enumeration (forbidden graph)', h.n, ORACLE_PATTERN_MAX_VERTICES)
    if len(component_masks(h)) != 1:
        raise InvalidParameterError('the forbidden graph should be connected.')


def _admissible(edges, mask, h, s):
    adj = edges.adjacency(mask)
    if matching_at_least(adj, edges.full, s + 1) > s:
        return False
    return not contains_subgraph(Graph._trusted(edges.n, adj), h)


def _next_same_weight(x):
    """Return the smallest int above x with the same number of set bits."""
    c = x & -x
    r = x + c
    return (((r ^ x) >> 2) // c) | r


def _hfree_descending(n, h, s):
    edges = EdgeTable(n)
    total = 1 << edges.nb_pairs
    for m in range(edges.nb_pairs, -1, -1):
        pub.sendMessage(events.HFREE_LEVEL, n=n, m=m)
        if m == 0:
            return 0, 0
        mask = (1 << m) - 1
        while mask < total:
            if _admissible(edges, mask, h, s):
                return m, mask
            mask = _next_same_weight(mask)


def _scan_hfree_chunk(args):
    n, start, end, h, s = args
    edges = EdgeTable(n)
    best = None
    for mask in range(start, end):
        m = mask.bit_count()
        if best is not None and m <= best[0]:
            continue
        if _admissible(edges, mask, h, s):
            best = (m, mask)
    return best


def hfree_oracle(n, h, s, thread_hint=1, with_witness=False):
    """Return the maximum number of edges of a graph on n vertices with no subgraph isomorphic to h and matching
    number at most s.

    With one worker, the edge counts are tried from C(n, 2) downward and, for each, the bitmasks in increasing order
    (a message is published on `events.HFREE_LEVEL` per edge count); the first admissible graph is the answer. With
    more workers the bitmask range is scanned in chunks as in `enumerate_oracle`. Both return the smallest bitmask
    among the maximum graphs.

    :param h: a connected graph with 2 to ORACLE_PATTERN_MAX_VERTICES vertices.
    :param with_witness: if True, return the pair (edge count, witness graph).
    :raises CapacityError: if n > ORACLE_MAX_VERTICES or h is too large.
    :raises InvalidParameterError: if h is not connected or has fewer than 2 vertices, or if s < 0.
    """
    _check_order(n)
    _check_pattern(h)
    if not isinstance(s, int) or s < 0:
        raise InvalidParameterError('s should be a nonnegative integer, got ' + str(s) + '.')
    if thread_hint <= 1:
        m, mask = _hfree_descending(n, h, s)
    else:
        best = None
        tasks = [(n, start, end, h, s) for start, end in _chunks(n, CHUNK_BITS)]
        for result in _run(_scan_hfree_chunk, tasks, thread_hint):
            if result is not None and _better(result, best):
                best = result
        m, mask = best
    if with_witness:
        return m, Graph.from_edge_mask(n, mask)
    return m
