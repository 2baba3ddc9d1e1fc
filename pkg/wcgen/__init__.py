"""Weakly chordal graph generation, recognition and benchmarking."""

__version__ = "0.1.0"
