"""Exact spectral data for Higgs bundles of classical groups and their real forms."""

__version__ = "0.1.0"
