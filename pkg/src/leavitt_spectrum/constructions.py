"""Graphs derived from E: quotient, restriction, extended and hedge graphs."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Iterable

from leavitt_spectrum.cycles import enumerate_cycles
from leavitt_spectrum.errors import PreconditionError
from leavitt_spectrum.graph import Edge, Graph, serialize_graph
from leavitt_spectrum.lattice import is_hereditary, is_saturated

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DerivedGraph:
    """A graph built from another one, with its provenance.

    ``name_map`` sends every vertex and edge name of ``graph`` to the object
    of the original graph it comes from.
    """

    graph: Graph
    provenance: dict[str, Any] = field(default_factory=dict, hash=False, compare=False)
    name_map: dict[str, Any] = field(default_factory=dict, hash=False, compare=False)


@dataclass(frozen=True)
class HedgeGraph:
    """The graph ₍H₎E together with how much of F_E(H) it holds.

    ``finite`` is true when F_E(H) is finite; ``truncated`` when some member
    of F_E(H) was longer than the bound and left out.
    """

    derived: DerivedGraph
    finite: bool
    truncated: bool

    @property
    def graph(self) -> Graph:
        return self.derived.graph


def _identity_map(g: Graph) -> dict[str, Any]:
    names: dict[str, Any] = {v: v for v in g.vertices}
    names.update({e.name: e.name for e in g.edges})
    return names


def _require_hereditary(g: Graph, H: frozenset[str]) -> None:
    if not is_hereditary(g, H):
        raise PreconditionError(f"{sorted(H)} is not hereditary")


def quotient_graph(g: Graph, H: Iterable[str]) -> DerivedGraph:
    """Return E/H: drop H and every edge ranging in H.

    Hereditariness of H keeps the sources of the retained edges outside H.
    """
    H = g.check_vertices(H)
    _require_hereditary(g, H)
    quotient = Graph(
        tuple(v for v in g.vertices if v not in H),
        tuple(e for e in g.edges if e.range not in H),
    )
    return DerivedGraph(
        quotient, {"construction": "quotient", "H": sorted(H)}, _identity_map(quotient)
    )


def restriction_graph(g: Graph, H: Iterable[str]) -> DerivedGraph:
    """Return E_H: keep H and every edge with source in H."""
    H = g.check_vertices(H)
    _require_hereditary(g, H)
    restricted = Graph(
        tuple(v for v in g.vertices if v in H),
        tuple(e for e in g.edges if e.source in H),
    )
    return DerivedGraph(
        restricted, {"construction": "restriction", "H": sorted(H)}, _identity_map(restricted)
    )


def extended_graph(g: Graph) -> DerivedGraph:
    """Return Ê: the edges of E plus a ghost edge e* from r(e) to s(e) for each e."""
    ghosts = tuple(Edge(f"{e.name}*", e.range, e.source) for e in g.edges)
    extended = Graph(g.vertices, g.edges + ghosts)
    names = _identity_map(g)
    names.update({ghost.name: ("ghost", e.name) for ghost, e in zip(ghosts, g.edges)})
    return DerivedGraph(extended, {"construction": "extended"}, names)


def entering_paths_finite(g: Graph, H: Iterable[str]) -> bool:
    """Return whether F_E(H) is finite.

    It is infinite exactly when a cycle lying outside H reaches H: the path
    from the cycle into H can be prefixed by any number of turns around it.
    """
    H = g.check_vertices(H)
    for c in enumerate_cycles(g):
        if c.vertices & H:
            continue
        if any(g.reach[v] & H for v in c.vertices):
            return False
    return True


def _entering_paths(
    g: Graph, H: frozenset[str], bound: int
) -> tuple[list[tuple[Edge, ...]], bool]:
    """List F_E(H) up to length ``bound``, shortest first."""
    found: list[tuple[Edge, ...]] = []
    truncated = False
    # only edges whose range can still reach H extend to members of F_E(H)
    useful = [e for e in g.edges if e.source not in H and g.reach[e.range] & H]
    frontier = [(e,) for e in useful]
    length = 1
    while frontier:
        if length > bound:
            truncated = True
            break
        following = []
        for alpha in frontier:
            last = alpha[-1]
            if last.range in H:
                found.append(alpha)
            else:
                following.extend(
                    alpha + (e,) for e in g.out_edges[last.range] if g.reach[e.range] & H
                )
        frontier = following
        length += 1
    return found, truncated


def hedge_graph(g: Graph, H: Iterable[str], max_path_length: int) -> HedgeGraph:
    """Build ₍H₎E on H ∪ F_E(H).

    F_E(H) holds the paths starting outside H whose ranges stay outside H
    until the last one, which lies in H. The edges are those of E with
    source in H plus a bar edge ~α from α to r(α) for each α ∈ F_E(H).
    Members of F_E(H) longer than ``max_path_length`` are left out.

    Raises:
        PreconditionError: if H is empty or not hereditary saturated.
    """
    H = g.check_vertices(H)
    if not H:
        raise PreconditionError("the hedge graph needs a nonempty H")
    if not (is_hereditary(g, H) and is_saturated(g, H)):
        raise PreconditionError(f"{sorted(H)} is not hereditary saturated")
    if max_path_length < 1:
        raise PreconditionError("max_path_length must be positive")

    finite = entering_paths_finite(g, H)
    paths, truncated = _entering_paths(g, H, max_path_length)
    if truncated:
        logger.debug(f"F_E(H) truncated at length {max_path_length} (finite={finite})")

    names = {v: v for v in g.vertices if v in H}
    names.update({e.name: e.name for e in g.edges if e.source in H})
    taken = set(names)
    vertices = [v for v in g.vertices if v in H]
    edges = [e for e in g.edges if e.source in H]
    for alpha in paths:
        label = "".join(e.name for e in alpha)
        while label in taken:
            label += "_"
        taken.add(label)
        bar = f"~{label}"
        taken.add(bar)
        names[label] = tuple(e.name for e in alpha)
        names[bar] = ("bar", label)
        vertices.append(label)
        edges.append(Edge(bar, label, alpha[-1].range))

    derived = DerivedGraph(
        Graph(tuple(vertices), tuple(edges)),
        {"construction": "hedge", "H": sorted(H), "max_path_length": max_path_length},
        names,
    )
    return HedgeGraph(derived, finite, truncated)


def serialize_derived(d: DerivedGraph) -> str:
    """Write a derived graph in the graph format under a provenance header.

    Ghost edges ``e*`` and bar edges ``~α`` keep names outside the graph
    file's name syntax, so output of the extended and hedge graphs is for
    reading only; :func:`~leavitt_spectrum.graph.parse_graph` rejects it.
    """
    header = [f"# construction: {d.provenance.get('construction', 'unknown')}"]
    header.extend(
        f"# {key}: {value}" for key, value in d.provenance.items() if key != "construction"
    )
    return "\n".join(header) + "\n" + serialize_graph(d.graph)


__all__ = [
    "DerivedGraph",
    "HedgeGraph",
    "entering_paths_finite",
    "extended_graph",
    "hedge_graph",
    "quotient_graph",
    "restriction_graph",
    "serialize_derived",
]
