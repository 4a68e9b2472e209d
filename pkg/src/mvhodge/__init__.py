"""Exact verification of the cut-and-join description of a Hodge-integral
generating function built from symmetric-group characters."""

__version__ = "0.1.0"
