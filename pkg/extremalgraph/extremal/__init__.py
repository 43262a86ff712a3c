"""Provide the closed-form answer of the extremal problem and the exhaustive computation that checks it.

It contains the modules `formulas` (Turan numbers t(n, k), g(n, k, s), the maximum edge count and the per-case
bounds of its proof), `kernels` (bitset invariants for the enumeration) and `oracle` (the enumeration of every
labeled graph on at most 8 vertices, the cell by cell verification and the H-free variant).
"""

__author__ = "Dimitri Watel"
__copyright__ = "Copyright 2018, extremalgraph"
__all__ = ['formulas', 'kernels', 'oracle']
