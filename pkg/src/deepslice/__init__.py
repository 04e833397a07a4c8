"""Knot invariants, 2-handlebody algebra and slice obstruction certificates."""

__version__ = "0.1.0"
