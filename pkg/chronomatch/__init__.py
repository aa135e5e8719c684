"""Chronological edge-driven temporal subgraph matching"""

__version__ = "0.1.0"
