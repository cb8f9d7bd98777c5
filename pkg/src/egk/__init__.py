"""Certified extremal graphs for  min-degree * alpha <= max-degree * mu."""

from egk.graph import Graph, parse_graph6, serialize_graph6

__version__ = "0.1.0"
__all__ = ["Graph", "parse_graph6", "serialize_graph6", "__version__"]
