"""Finite-group computations around the Alperin weight conjecture for G2(q) and 3D4(q)."""

__version__ = "0.1.0"
