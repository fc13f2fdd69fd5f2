"""Exact linear algebra on Galois extensions of QQ and GF(p)."""

__version__ = "0.1.0"
