"""Topics published with pubsub while the long computations run.

The library never prints. Long computations publish messages on the topics below with `pub.sendMessage`; any listener
subscribed with `pub.subscribe` receives the keyword arguments listed for the topic. Without listeners the messages
are dropped.

- ORACLE_CHUNK 'oracle.chunk' (n, done, total): an enumeration chunk was merged into the table.
- ORACLE_CELL 'oracle.cell' (n, k, s, expected, actual, passed): a table cell was compared to the formula.
- SEARCH_RESTART 'search.restart' (restart_id, seed, best_edges, formula_value): a local search restart ended.
- SEARCH_MOVE 'search.move' (kind, vertices, edges): a local search move was accepted; edges is the new edge count.
- HFREE_LEVEL 'hfree.level' (n, m): the H-free search starts examining the graphs with m edges.

The class `StderrReporter` subscribes to every topic and writes one line per message; the command line installs it
with --verbose.
"""

import sys

from pubsub import pub

__author__ = "Dimitri Watel"
__copyright__ = "Copyright 2018, extremalgraph"

ORACLE_CHUNK = 'oracle.chunk'
ORACLE_CELL = 'oracle.cell'
SEARCH_RESTART = 'search.restart'
SEARCH_MOVE = 'search.move'
HFREE_LEVEL = 'hfree.level'


class StderrReporter:
    """Write every published message on a stream (the standard error by default).

    The reporter stays subscribed as long as it is referenced (pubsub only keeps weak references to listeners).
    """

    def __init__(self, stream=None):
        self.__stream = stream
        pub.subscribe(self.__oracle_chunk, ORACLE_CHUNK)
        pub.subscribe(self.__oracle_cell, ORACLE_CELL)
        pub.subscribe(self.__search_restart, SEARCH_RESTART)
        pub.subscribe(self.__search_move, SEARCH_MOVE)
        pub.subscribe(self.__hfree_level, HFREE_LEVEL)

    def __write(self, topic, text):
        stream = self.__stream if self.__stream is not None else sys.stderr
        stream.write('[' + topic + '] ' + text + '\n')

    def __oracle_chunk(self, n, done, total):
        self.__write(ORACLE_CHUNK, 'n=%d chunk %d/%d' % (n, done, total))

    def __oracle_cell(self, n, k, s, expected, actual, passed):
        self.__write(ORACLE_CELL, 'n=%d k=%d s=%d formula=%d oracle=%d %s' %
                     (n, k, s, expected, actual, 'PASS' if passed else 'FAIL'))

    def __search_restart(self, restart_id, seed, best_edges, formula_value):
        self.__write(SEARCH_RESTART, 'restart %d seed=%d best=%d formula=%d' %
                     (restart_id, seed, best_edges, formula_value))

    def __search_move(self, kind, vertices, edges):
        self.__write(SEARCH_MOVE, '%s %s -> %d edges' % (kind, ','.join(map(str, vertices)), edges))

    def __hfree_level(self, n, m):
        self.__write(HFREE_LEVEL, 'n=%d m=%d' % (n, m))

    def unsubscribe(self):
        """Stop listening to every topic."""
        pub.unsubscribe(self.__oracle_chunk, ORACLE_CHUNK)
        pub.unsubscribe(self.__oracle_cell, ORACLE_CELL)
        pub.unsubscribe(self.__search_restart, SEARCH_RESTART)
        pub.unsubscribe(self.__search_move, SEARCH_MOVE)
        pub.unsubscribe(self.__hfree_level, HFREE_LEVEL)
