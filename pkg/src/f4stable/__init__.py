"""Exact-arithmetic stability calculator for the dual Vinberg representations of F4."""

__version__ = "0.1.0"
