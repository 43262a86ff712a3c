"""Provide the graph representation, the extremal constructions and the edge-list file format.

It contains the three modules `graph` (the immutable bitset class `Graph`, the class `Partition` and the connectivity
helpers), `generators` (Turan graphs T(n, k), the graphs G(n, k, s), random graphs and named fixtures) and `graphio`
(the edge-list text format).

A `Graph` is never edited in place: every change builds a new graph, so graphs may be shared between threads.
"""

__author__ = "Dimitri Watel"
__copyright__ = "Copyright 2018, extremalgraph"
__all__ = ['graph', 'generators', 'graphio']
