"""Computations with decategorified finitary 2-categories."""

__version__ = "0.1.0"
