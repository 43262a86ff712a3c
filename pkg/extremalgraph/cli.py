"""Command line front end.

    extremalgraph [--verbose] formula --n N --k K --s S [--crossover]
    extremalgraph [--verbose] construct {turan,gks} --n N --k K [--s S] [--out PATH]
    extremalgraph [--verbose] analyze --in PATH
    extremalgraph [--verbose] verify --max-n N [--threads T] [--csv PATH]
    extremalgraph [--verbose] search --n N --k K --s S [--seed SEED] [--restarts R] [--iters I] [--out PATH]
    extremalgraph [--verbose] hfree --h NAME_OR_PATH --n N --s S [--threads T]

Single queries print one JSON object, sweeps print CSV. The path '-' is the standard input (--in) or output (--out,
--csv). The exit code is 0 on success, 1 when a verification fails and 2 on a usage, parse, parameter or capacity
error, with the message on the standard error.
"""

import argparse
import csv
import json
import os
import sys

from extremalgraph import events
from extremalgraph.exceptions.graph_errors import CapacityError, GraphError, InvalidParameterError, \
    VerificationFailure
from extremalgraph.extremal.formulas import ex_edges, gks_crossover
from extremalgraph.extremal.oracle import verify_theorem, write_table_csv
from extremalgraph.graph.generators import fixture, make_gks, make_turan
from extremalgraph.graph.graph import Graph
from extremalgraph.graph.graphio import read_graph, save_graph, write_graph
from extremalgraph.hfree.proposition import forbidden_pattern, verify_proposition
from extremalgraph.invariants.clique import clique_number
from extremalgraph.invariants.matching import matching_number
from extremalgraph.invariants.structure import gallai_edmonds, tutte_berge_max_deficiency
from extremalgraph.search.localsearch import DEFAULT_ITERATIONS, DEFAULT_RESTARTS, local_search

__author__ = "Dimitri Watel"
__copyright__ = "Copyright 2018, extremalgraph"

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def _count(text):
    """argparse type of the nonnegative integer flags."""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError('expected a nonnegative integer, got ' + repr(text))
    if value < 0:
        raise argparse.ArgumentTypeError('expected a nonnegative integer, got ' + repr(text))
    return value


def _print_json(obj):
    sys.stdout.write(json.dumps(obj) + '\n')


def _open_output(path):
    if path == '-':
        return sys.stdout, False
    try:
        return open(path, 'w', newline=''), True
    except OSError as e:
        raise InvalidParameterError('cannot write ' + path + ': ' + str(e) + '.')


def cmd_formula(args):
    result = ex_edges(args.n, args.k, args.s)
    out = result.to_dict()
    if args.crossover:
        out['crossover_n'] = gks_crossover(args.k, args.s)
    _print_json(out)
    return EXIT_OK


def cmd_construct(args):
    if args.family == 'turan':
        g = make_turan(args.n, args.k)[0]
    else:
        if args.s is None:
            raise InvalidParameterError('the gks construction needs --s.')
        g = make_gks(args.n, args.k, args.s)[0]
    save_graph(g, args.out)
    return EXIT_OK


def _guarded(compute, skipped, field):
    try:
        return compute()
    except CapacityError as e:
        skipped[field] = e.message
        return None


def cmd_analyze(args):
    g = read_graph(args.input)
    skipped = {}
    nu, matching = matching_number(g)
    clique = _guarded(lambda: clique_number(g), skipped, 'clique_number')
    witness = _guarded(lambda: tutte_berge_max_deficiency(g), skipped, 'tutte_berge')
    partition = _guarded(lambda: gallai_edmonds(g), skipped, 'gallai_edmonds')
    _print_json({
        'n': g.n,
        'm': g.m,
        'clique_number': None if clique is None else clique[0],
        'clique': None if clique is None else list(clique[1]),
        'matching_number': nu,
        'matching': [list(e) for e in matching.pairs],
        'tutte_berge': None if witness is None else witness.to_dict(),
        'gallai_edmonds': None if partition is None else partition.to_dict(),
        'skipped': skipped,
    })
    return EXIT_OK


def cmd_verify(args):
    report = verify_theorem(args.max_n, args.threads)
    if args.csv is not None:
        stream, close = _open_output(args.csv)
        try:
            write_table_csv(report, stream)
        finally:
            if close:
                stream.close()
    failures = report.failures
    _print_json({
        'max_n': args.max_n,
        'cells': len(report.cells),
        'failures': [[c.n, c.k, c.s, c.max_edges, c.formula, write_graph(Graph.from_edge_mask(c.n, c.witness))]
                     for c in failures],
        'status': 'PASS' if report.passed else 'FAIL',
    })
    return EXIT_OK if report.passed else EXIT_FAILURE


def cmd_search(args):
    result = local_search(args.n, args.k, args.s, seed=args.seed, iters=args.iters, restarts=args.restarts)
    writer = csv.writer(sys.stdout, lineterminator='\n')
    writer.writerows(result.csv_rows())
    if args.out is not None:
        save_graph(result.best.graph, args.out)
    return EXIT_OK


def _pattern_graph(name):
    try:
        return fixture(name)
    except InvalidParameterError:
        if os.path.exists(name):
            return read_graph(name)
        raise


def cmd_hfree(args):
    h = _pattern_graph(args.h)
    pattern = forbidden_pattern(h)
    if not pattern.critical:
        raise InvalidParameterError(args.h + ' is not color-critical.')
    if args.n is None or args.s is None:
        raise InvalidParameterError('the hfree command needs --n and --s.')
    report = verify_proposition(h, args.n, args.s, args.threads)
    out = {'h': args.h}
    out.update(('h_' + key, value) for key, value in pattern.to_dict().items())
    out.update(report.to_dict())
    _print_json(out)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog='extremalgraph', description='Extremal graphs with bounded clique number '
                                                                       'and bounded matching number.')
    parser.add_argument('--verbose', action='store_true', help='report the progress on the standard error')
    commands = parser.add_subparsers(dest='command', required=True)

    formula = commands.add_parser('formula', help='maximum number of edges given by the closed formula')
    formula.add_argument('--n', type=_count, required=True)
    formula.add_argument('--k', type=_count, required=True)
    formula.add_argument('--s', type=_count, required=True)
    formula.add_argument('--crossover', action='store_true',
                         help='add the smallest n from which G(n, k, s) beats T(2s + 1, k)')
    formula.set_defaults(run=cmd_formula)

    construct = commands.add_parser('construct', help='write an extremal graph as an edge list')
    construct.add_argument('family', choices=('turan', 'gks'))
    construct.add_argument('--n', type=_count, required=True)
    construct.add_argument('--k', type=_count, required=True)
    construct.add_argument('--s', type=_count)
    construct.add_argument('--out', default='-')
    construct.set_defaults(run=cmd_construct)

    analyze = commands.add_parser('analyze', help='invariants of an edge-list graph')
    analyze.add_argument('--in', dest='input', required=True)
    analyze.set_defaults(run=cmd_analyze)

    verify = commands.add_parser('verify', help='compare the formula with an exhaustive enumeration')
    verify.add_argument('--max-n', dest='max_n', type=_count, required=True)
    verify.add_argument('--threads', type=_count, default=1)
    verify.add_argument('--csv')
    verify.set_defaults(run=cmd_verify)

    search = commands.add_parser('search', help='local search for an extremal graph')
    search.add_argument('--n', type=_count, required=True)
    search.add_argument('--k', type=_count, required=True)
    search.add_argument('--s', type=_count, required=True)
    search.add_argument('--seed', type=_count, default=0)
    search.add_argument('--restarts', type=_count, default=DEFAULT_RESTARTS)
    search.add_argument('--iters', type=_count, default=DEFAULT_ITERATIONS)
    search.add_argument('--out')
    search.set_defaults(run=cmd_search)

    hfree = commands.add_parser('hfree', help='H-free maximum for a color-critical graph H')
    hfree.add_argument('--h', required=True, help='K<n>, C<n>, P<n>, K4E, PETERSEN or an edge-list file')
    hfree.add_argument('--n', type=_count)
    hfree.add_argument('--s', type=_count)
    hfree.add_argument('--threads', type=_count, default=1)
    hfree.set_defaults(run=cmd_hfree)
    return parser


def main(argv=None):
    """Run the command line and return its exit code."""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    reporter = events.StderrReporter() if args.verbose else None
    try:
        return args.run(args)
    except VerificationFailure as e:
        sys.stderr.write(e.message + '\n')
        return EXIT_FAILURE
    except GraphError as e:
        sys.stderr.write(e.message + '\n')
        return EXIT_USAGE
    finally:
        if reporter is not None:
            reporter.unsubscribe()


if __name__ == '__main__':
    sys.exit(main())
