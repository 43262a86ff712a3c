"""Provide the exact graph invariants on both sides of the extremal problem.

It contains the modules `matching` (blossom algorithm and a subset dynamic programming oracle), `clique` (branch and
bound maximum clique) and `structure` (Tutte-Berge witnesses and the Gallai-Edmonds partition).

Every function is pure and allocates its scratch arrays per call. The exhaustive ones have a hard capacity and raise
`CapacityError` above it instead of truncating the search.
"""

__author__ = "Dimitri Watel"
__copyright__ = "Copyright 2018, extremalgraph"
__all__ = ['matching', 'clique', 'structure']
