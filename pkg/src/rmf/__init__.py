"""Exact R-matrix denominators for fundamental representations of
twisted quantum affine algebras (types A(2) odd/even, B(1), D(2))."""

__version__ = "0.1.0"
