"""Exact rational computations for homotopy Lie algebras of highly connected
even-dimensional manifolds and the ranks of their automorphism spaces."""

__version__ = "0.1.0"
