"""This package defines all the exceptions of all the modules."""

__author__ = "Dimitri Watel"
__copyright__ = "Copyright 2018, extremalgraph"
