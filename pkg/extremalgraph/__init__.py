"""Extremal graphs with bounded clique number and bounded matching number.

Compute, construct and exhaustively verify the maximum number of edges of a graph on n vertices with clique number at
most k and matching number at most s.
It contains six packages :
- graph : a small immutable bitset graph, the extremal constructions and the edge-list file format.
- extremal : the closed-form edge counts and the exhaustive oracle that checks them.
- invariants : matching number, clique number, Tutte-Berge witnesses and the Gallai-Edmonds partition.
- search : neighborhood replacement moves and a constraint-preserving local search.
- hfree : chromatic number, color-criticality and subgraph containment for forbidden patterns.
- exceptions : graph exceptions.
and the modules `events` (pubsub topics) and `cli` (command line front end).
"""

__author__ = "Dimitri Watel"
__copyright__ = "Copyright 2018, extremalgraph"
__credits__ = ["Dimitri Watel"]
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Dimitri Watel"
__email__ = "patatemouton@gmail.com"
__status__ = "Development"
