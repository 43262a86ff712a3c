"""Provide the neighborhood replacement moves and a local search for extremal graphs.

It contains the modules `symmetrization` (replacing the neighborhood of a vertex by the one of a non adjacent
vertex, and the fixpoint of those moves on a Tutte-Berge set) and `localsearch` (restarts of perturbations, moves and
greedy edge additions that keep the clique number at most k and the matching number at most s).
"""

__author__ = "Dimitri Watel"
__copyright__ = "Copyright 2018, extremalgraph"
__all__ = ['symmetrization', 'localsearch']
