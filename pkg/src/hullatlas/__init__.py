"""Exact and sampled computations of algebraic boundaries of convex hulls of surfaces in P^4."""

__version__ = "0.1.0"
