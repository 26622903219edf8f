"""Exact-arithmetic toolkit for the split rank-2 exceptional group: root
combinatorics, the 7-dimensional matrix model and its invariant 3-form,
lattice/wedge calculations, filtered phi-modules, and multiplicity
bookkeeping, with a verification CLI."""

__version__ = "0.1.0"
