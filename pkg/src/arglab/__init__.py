"""Amply regular graphs with mu = (k-1)/2: constructions and exact verification."""

__version__ = "0.1.0"
