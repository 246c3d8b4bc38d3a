"""Asymmetric quantum codes from classical cyclic codes."""

__version__ = "0.1.0"
