"""Exact arithmetic and first-order tooling over quaternions and octonions."""

__version__ = "0.1.0"
