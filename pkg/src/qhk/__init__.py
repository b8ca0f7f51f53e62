"""Exact combinatorics and module verification for cyclotomic quiver Hecke
algebras of type D^(2)_{l+1} at the fundamental weight ``Lambda0``."""

__version__ = "0.1.0"
