"""Exact Haar averages of characteristic polynomials over classical groups."""

__version__ = "0.1.0"
