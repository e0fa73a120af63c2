"""Exact truncated q-series, product factories and progression matching."""

__version__ = "0.1.0"
