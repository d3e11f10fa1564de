"""Cycles, exits, Condition (L), P_c(E) and comets."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product

import networkx as nx

from leavitt_spectrum.errors import PreconditionError
from leavitt_spectrum.graph import Edge, Graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Cycle:
    """A closed path whose edges have pairwise distinct sources.

    Stored in canonical rotation: the first edge starts at the
    lexicographically smallest vertex of the cycle.
    """

    edges: tuple[Edge, ...]

    def __post_init__(self):
        """Check closedness and distinct sources."""
        if not self.edges:
            raise PreconditionError("a cycle has at least one edge")
        sources = [e.source for e in self.edges]
        if len(set(sources)) != len(sources):
            raise PreconditionError(f"edges {self.edge_names} repeat a source")
        for first, second in zip(self.edges, self.edges[1:] + self.edges[:1]):
            if first.range != second.source:
                raise PreconditionError(f"edges {self.edge_names} do not form a closed path")

    @classmethod
    def canonical(cls, edges: tuple[Edge, ...]) -> Cycle:
        """Rotate ``edges`` so the smallest vertex name is the first source."""
        start = min(range(len(edges)), key=lambda i: (edges[i].source, edges[i].name))
        return cls(edges[start:] + edges[:start])

    @property
    def edge_names(self) -> tuple[str, ...]:
        return tuple(e.name for e in self.edges)

    @property
    def vertices(self) -> frozenset[str]:
        """c⁰, the vertices the cycle passes through."""
        return frozenset(e.source for e in self.edges)

    @property
    def base(self) -> str:
        return self.edges[0].source

    def rotated_to(self, v: str) -> tuple[Edge, ...]:
        """Return the edge sequence of this cycle based at the vertex ``v``."""
        for i, e in enumerate(self.edges):
            if e.source == v:
                return self.edges[i:] + self.edges[:i]
        raise PreconditionError(f"vertex {v!r} is not on the cycle {self}")

    def sort_key(self) -> tuple:
        return len(self.edges), tuple(e.source for e in self.edges), self.edge_names

    def __str__(self) -> str:
        return "(" + " ".join(self.edge_names) + ")"


def enumerate_cycles(g: Graph) -> list[Cycle]:
    """List every cycle of the graph once, up to rotation, in canonical form.

    Vertex cycles come from networkx on the simple graph underlying ``g``;
    each is then expanded over the choices among parallel edges.
    """
    simple = nx.DiGraph()
    simple.add_nodes_from(g.vertices)
    parallel: dict[tuple[str, str], list[Edge]] = {}
    for e in g.edges:
        simple.add_edge(e.source, e.range)
        parallel.setdefault((e.source, e.range), []).append(e)

    found = []
    for nodes in nx.simple_cycles(simple):
        hops = [parallel[(a, b)] for a, b in zip(nodes, nodes[1:] + nodes[:1])]
        for choice in product(*hops):
            found.append(Cycle.canonical(tuple(choice)))
    found.sort(key=Cycle.sort_key)
    logger.debug(f"Found {len(found)} cycles")
    return found


def _check_cycle(g: Graph, c: Cycle) -> None:
    for e in c.edges:
        if g.edge_by_name.get(e.name) != e:
            raise PreconditionError(f"{c} is not a cycle of the graph")


def exits_of(g: Graph, c: Cycle) -> list[Edge]:
    """Return the edges leaving a vertex of ``c`` that are not edges of ``c``."""
    _check_cycle(g, c)
    own = set(c.edge_names)
    return [e for e in g.edges if e.source in c.vertices and e.name not in own]


def exitless_cycles(g: Graph) -> list[Cycle]:
    return [c for c in enumerate_cycles(g) if not exits_of(g, c)]


def condition_L(g: Graph) -> bool:
    """Return whether every cycle of the graph has an exit."""
    return not exitless_cycles(g)


def pc_set(g: Graph) -> frozenset[str]:
    """Return P_c(E), the vertices on cycles without exits."""
    result: set[str] = set()
    for c in exitless_cycles(g):
        result |= c.vertices
    return frozenset(result)


def is_comet(g: Graph) -> bool:
    """Return whether ``g`` has exactly one cycle and every vertex reaches it.

    For a finite graph this is equivalent to every infinite path ending in
    the cycle.
    """
    cycles = enumerate_cycles(g)
    if len(cycles) != 1:
        return False
    on_cycle = cycles[0].vertices
    return all(g.reach[v] & on_cycle for v in g.vertices)


def comet_matrix_size(g: Graph) -> int:
    """Return n with L(E) ≅ M_n(K[x,x⁻¹]) for a comet E.

    n counts the paths ending at a fixed vertex v₀ of the cycle μ that do not
    contain μ. Such a path either runs along the cycle for fewer than |μ|
    edges, or comes from the acyclic part outside the cycle, enters the
    cycle at some vertex u and then follows the unique arc from u to v₀.
    The count does not depend on v₀.

    Raises:
        PreconditionError: if ``g`` is not a comet.
    """
    if not is_comet(g):
        raise PreconditionError("the graph is not a comet")
    mu = enumerate_cycles(g)[0]
    on_cycle = mu.vertices
    outside = [v for v in g.vertices if v not in on_cycle]

    # paths_to[x]: paths lying outside the cycle and ending at x
    paths_to: dict[str, int] = {}
    order = nx.topological_sort(g.nx_graph.subgraph(outside))
    for x in order:
        paths_to[x] = 1 + sum(
            paths_to[e.source] for e in g.in_edges[x] if e.source not in on_cycle
        )
    entering = sum(
        paths_to[e.source]
        for e in g.edges
        if e.source not in on_cycle and e.range in on_cycle
    )
    return len(mu.edges) + entering


__all__ = [
    "Cycle",
    "comet_matrix_size",
    "condition_L",
    "enumerate_cycles",
    "exitless_cycles",
    "exits_of",
    "is_comet",
    "pc_set",
]
