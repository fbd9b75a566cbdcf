"""Exact generation probabilities, module censuses and cohomology for finite groups."""

__version__ = "0.1.0"
