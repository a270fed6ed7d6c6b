"""Discrete phase-space numerics for n-qudit systems labelled by GF(d^n)."""

__version__ = "0.1.0"
