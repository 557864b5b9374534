"""Exact verification toolkit for bicanonical embeddings of fake projective planes."""

__version__ = "0.1.0"
