"""Generating functions, the cut-and-join flow and Hodge extraction."""
