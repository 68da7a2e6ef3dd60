"""Machine checks of edge-Folkman arrowing facts for joins of cycles."""
from .cliques import chromatic_number, clique_number, enumerate_cliques, is_independent
from .expr import ArityError, ParseError, build, parse, to_string
from .graph import Graph, complete, cycle, join, path

__version__ = "0.1.0"

__all__ = [
    "ArityError", "Graph", "ParseError", "build", "chromatic_number", "clique_number",
    "complete", "cycle", "enumerate_cliques", "is_independent", "join", "parse", "path",
    "to_string",
]
