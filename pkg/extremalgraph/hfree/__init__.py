"""Provide the tools for forbidden color-critical subgraphs.

It contains the modules `coloring` (exact colorings and chromatic number), `containment` (non induced subgraph
search) and `proposition` (color-criticality and the comparison of the H-free maximum with g(n, k, s)).
"""

__author__ = "Dimitri Watel"
__copyright__ = "Copyright 2018, extremalgraph"
__all__ = ['coloring', 'containment', 'proposition']
