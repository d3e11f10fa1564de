"""Small named graphs used as reference cases."""

from leavitt_spectrum.errors import DomainError
from leavitt_spectrum.graph import Graph, parse_graph

GRAPH_TEXTS = {
    # K[x,x^-1]: prime, not primitive
    "LOOP": "vertex v\nedge e v v\n",
    # Toeplitz algebra: primitive, not simple
    "TOEPLITZ": "vertex v\nvertex w\nedge e v v\nedge f v w\n",
    # L(1,2): simple
    "ROSE2": "vertex v\nedge e1 v v\nedge e2 v v\n",
    "TWO_LOOPS": "vertex v\nvertex w\nedge e v v\nedge f w w\n",
    # M_3(K)
    "LINE3": "vertex u1\nvertex u2\nvertex u3\nedge a u1 u2\nedge b u2 u3\n",
    # M_2(K[x,x^-1])
    "COMET2": "vertex v\nvertex w\nedge e v v\nedge f w v\n",
    "C3": "vertex v0\nvertex v1\nvertex v2\nedge a v0 v1\nedge b v1 v2\nedge c v2 v0\n",
}


def named_graph(name: str) -> Graph:
    """Return the catalogue graph called ``name`` (case-insensitive)."""
    try:
        return parse_graph(GRAPH_TEXTS[name.upper()])
    except KeyError as exc:
        raise DomainError(
            f"no catalogue graph {name!r}; known: {', '.join(GRAPH_TEXTS)}"
        ) from exc


__all__ = ["GRAPH_TEXTS", "named_graph"]
