"""Quantum symmetry toolkit for vertex-transitive graphs."""

__version__ = "0.1.0"
