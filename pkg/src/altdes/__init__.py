"""Counting permutations by alternating descents."""
__version__ = "0.1.0"
