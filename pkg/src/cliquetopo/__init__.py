"""Topology of Whitney complexes of cycle and path graph complements."""
__version__ = "0.1.0"
