"""Finite directed multigraphs, paths and reachability."""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

import graphviz
import networkx as nx

from leavitt_spectrum.errors import GraphFormatError, UnknownVertexError

logger = logging.getLogger(__name__)

NAME_PATTERN = re.compile(r"^[A-Za-z0-9_]+$")

VertexSet = frozenset
"""A subset of the vertex names of a graph."""


@dataclass(frozen=True)
class Edge:
    """An edge ``name`` with source ``source`` and range ``range``."""

    name: str
    source: str
    range: str


@dataclass(frozen=True)
class Graph:
    """A finite directed multigraph E = (E⁰, E¹, s, r).

    Vertices and edges keep their declaration order. Parallel edges and
    self-loops are allowed. Instances are immutable; derived lookup tables
    are computed once on first use.
    """

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        """Validate names and endpoints."""
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        seen: set[str] = set()
        for v in self.vertices:
            if v in seen:
                raise GraphFormatError(f"duplicate vertex name {v!r}")
            seen.add(v)
        seen_edges: set[str] = set()
        for e in self.edges:
            if e.name in seen_edges:
                raise GraphFormatError(f"duplicate edge name {e.name!r}")
            seen_edges.add(e.name)
            for endpoint in (e.source, e.range):
                if endpoint not in seen:
                    raise GraphFormatError(
                        f"edge {e.name!r} has undeclared endpoint {endpoint!r}"
                    )

    @classmethod
    def from_edges(
        cls, vertices: Iterable[str], edges: Iterable[tuple[str, str, str]]
    ) -> Graph:
        """Build a graph from vertex names and ``(name, source, range)`` triples."""
        return cls(tuple(vertices), tuple(Edge(*triple) for triple in edges))

    @cached_property
    def vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertices)

    @cached_property
    def edge_by_name(self) -> dict[str, Edge]:
        return {e.name: e for e in self.edges}

    @cached_property
    def out_edges(self) -> dict[str, tuple[Edge, ...]]:
        """Map every vertex v to s⁻¹(v), in declaration order."""
        table: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            table[e.source].append(e)
        return {v: tuple(es) for v, es in table.items()}

    @cached_property
    def in_edges(self) -> dict[str, tuple[Edge, ...]]:
        """Map every vertex v to r⁻¹(v), in declaration order."""
        table: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            table[e.range].append(e)
        return {v: tuple(es) for v, es in table.items()}

    @cached_property
    def nx_graph(self) -> nx.MultiDiGraph:
        """The graph as a networkx multigraph keyed by edge name."""
        g = nx.MultiDiGraph()
        g.add_nodes_from(self.vertices)
        for e in self.edges:
            g.add_edge(e.source, e.range, key=e.name)
        return g

    @cached_property
    def reach(self) -> dict[str, frozenset[str]]:
        """Map every vertex v to its tree T(v) = {w | v ≥ w}."""
        g = self.nx_graph
        return {v: frozenset(nx.descendants(g, v)) | {v} for v in self.vertices}

    def check_vertices(self, names: Iterable[str]) -> frozenset[str]:
        """Return ``names`` as a vertex set, rejecting undeclared names."""
        result = frozenset(names)
        unknown = result - self.vertex_set
        if unknown:
            raise UnknownVertexError(f"unknown vertex name(s): {', '.join(sorted(unknown))}")
        return result


@dataclass(frozen=True)
class Path:
    """A path e₁…eₙ; a length-0 path is the vertex ``start`` itself."""

    start: str
    edges: tuple[Edge, ...] = ()

    @property
    def source(self) -> str:
        return self.start

    @property
    def range(self) -> str:
        return self.edges[-1].range if self.edges else self.start

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> frozenset[str]:
        """μ⁰, the set of vertices the path visits."""
        return frozenset([self.start, *(e.range for e in self.edges)])

    def __str__(self) -> str:
        return "".join(e.name for e in self.edges) if self.edges else self.start


def walk(g: Graph, edge_names: Sequence[str], start: Optional[str] = None) -> Path:
    """Build a path from edge names, checking that consecutive edges chain.

    An empty ``edge_names`` needs ``start`` and yields the length-0 path at it.
    """
    if not edge_names:
        if start is None:
            raise GraphFormatError("a length-0 path needs a start vertex")
        g.check_vertices([start])
        return Path(start)
    try:
        edges = tuple(g.edge_by_name[name] for name in edge_names)
    except KeyError as exc:
        raise GraphFormatError(f"unknown edge name {exc.args[0]!r}") from exc
    for first, second in zip(edges, edges[1:]):
        if first.range != second.source:
            raise GraphFormatError(
                f"edges {first.name!r} and {second.name!r} do not form a path"
            )
    if start is not None and start != edges[0].source:
        raise GraphFormatError(f"path does not start at {start!r}")
    return Path(edges[0].source, edges)


def parse_graph(text: str) -> Graph:
    """Parse the line-oriented graph format.

    Each line is ``vertex NAME``, ``edge NAME SOURCE RANGE``, a ``#`` comment
    or blank. Edges may refer to vertices declared later in the document.

    Raises:
        GraphFormatError: on a syntax error, a duplicate name or an undeclared
            endpoint, carrying the offending line number.
    """
    vertices: list[str] = []
    vertex_lines: dict[str, int] = {}
    edges: list[Edge] = []
    edge_lines: dict[str, int] = {}

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        keyword, names = tokens[0], tokens[1:]
        if keyword == "vertex":
            if len(names) != 1:
                raise GraphFormatError("expected 'vertex NAME'", number)
        elif keyword == "edge":
            if len(names) != 3:
                raise GraphFormatError("expected 'edge NAME SOURCE RANGE'", number)
        else:
            raise GraphFormatError(f"unknown keyword {keyword!r}", number)
        for name in names:
            if not NAME_PATTERN.match(name):
                raise GraphFormatError(f"invalid name {name!r}", number)

        if keyword == "vertex":
            name = names[0]
            if name in vertex_lines:
                raise GraphFormatError(
                    f"duplicate vertex name {name!r} (first declared on line {vertex_lines[name]})",
                    number,
                )
            vertex_lines[name] = number
            vertices.append(name)
        else:
            name, source, range_ = names
            if name in edge_lines:
                raise GraphFormatError(
                    f"duplicate edge name {name!r} (first declared on line {edge_lines[name]})",
                    number,
                )
            edge_lines[name] = number
            edges.append(Edge(name, source, range_))

    for e in edges:
        for endpoint in (e.source, e.range):
            if endpoint not in vertex_lines:
                raise GraphFormatError(
                    f"undeclared endpoint {endpoint!r} of edge {e.name!r}",
                    edge_lines[e.name],
                )

    g = Graph(tuple(vertices), tuple(edges))
    logger.debug(f"Parsed graph with {len(g.vertices)} vertices and {len(g.edges)} edges")
    return g


def serialize_graph(g: Graph) -> str:
    """Write a graph in the text format: vertices first, then edges."""
    lines = [f"vertex {v}" for v in g.vertices]
    lines.extend(f"edge {e.name} {e.source} {e.range}" for e in g.edges)
    return "\n".join(lines) + ("\n" if lines else "")


def reaches(g: Graph, v: str, w: str) -> bool:
    """Return whether v ≥ w, i.e. some path runs from v to w.

    Always true for v = w through the length-0 path.
    """
    g.check_vertices([v, w])
    return w in g.reach[v]


def tree(g: Graph, X: Iterable[str]) -> frozenset[str]:
    """Return T(X), the vertices reachable from some member of X."""
    result: set[str] = set()
    for x in g.check_vertices(X):
        result |= g.reach[x]
    return frozenset(result)


def sinks(g: Graph) -> frozenset[str]:
    """Return the vertices that emit no edges."""
    return frozenset(v for v in g.vertices if not g.out_edges[v])


def to_dot(g: Graph, name: str = "E") -> str:
    """Export the graph as DOT source; edge labels carry the edge names."""
    dot = graphviz.Digraph(name=name, comment="finite directed graph")
    for v in g.vertices:
        dot.node(v, v)
    for e in g.edges:
        dot.edge(e.source, e.range, label=e.name)
    return dot.source


__all__ = [
    "Edge",
    "Graph",
    "Path",
    "VertexSet",
    "parse_graph",
    "reaches",
    "serialize_graph",
    "sinks",
    "to_dot",
    "tree",
    "walk",
]
