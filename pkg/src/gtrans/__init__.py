"""Extensible, object-encoded transformations over algebraic data types."""

__version__ = "0.1.0"
