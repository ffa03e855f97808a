"""Unified university inventory system."""

__version__ = "0.1.0"
