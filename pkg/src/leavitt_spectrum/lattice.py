"""Hereditary and saturated vertex sets and the lattice 𝓗_E."""

import logging
from itertools import combinations
from typing import Iterable, Optional

from leavitt_spectrum.context import Context
from leavitt_spectrum.errors import ThresholdExceededError
from leavitt_spectrum.graph import Graph, sinks, tree

logger = logging.getLogger(__name__)


def lattice_key(H: frozenset[str]) -> tuple[int, list[str]]:
    """Sort key of vertex sets: by size, then by the sorted member list."""
    return len(H), sorted(H)


def is_hereditary(g: Graph, H: Iterable[str]) -> bool:
    """Return whether v ∈ H and v ≥ w imply w ∈ H."""
    H = g.check_vertices(H)
    return all(g.reach[v] <= H for v in H)


def is_saturated(g: Graph, H: Iterable[str]) -> bool:
    """Return whether every non-sink whose edges all range in H lies in H."""
    H = g.check_vertices(H)
    for v in g.vertices:
        out = g.out_edges[v]
        if v not in H and out and all(e.range in H for e in out):
            return False
    return True


def omega(g: Graph, X: Iterable[str]) -> frozenset[str]:
    """Return Ω(X): the vertices outside X that reach no member of X."""
    X = g.check_vertices(X)
    return frozenset(w for w in g.vertices if w not in X and not (g.reach[w] & X))


def closure_stages(g: Graph, X: Iterable[str]) -> list[frozenset[str]]:
    """Return the stages Λ₀(X) ⊆ Λ₁(X) ⊆ … up to the fixpoint.

    Λ₀(X) = T(X) and Λₙ(X) adds every non-sink y with r(s⁻¹(y)) ⊆ Λₙ₋₁(X).
    The last stage is the hereditary saturated closure; it is reached after
    at most |E⁰| steps.
    """
    stage = tree(g, X)
    stages = [stage]
    while True:
        added = {
            y
            for y in g.vertices
            if y not in stage
            and g.out_edges[y]
            and all(e.range in stage for e in g.out_edges[y])
        }
        if not added:
            break
        stage = stage | added
        stages.append(stage)
        logger.debug(f"Λ{len(stages) - 1} adds {sorted(added)}")
    return stages


def closure(g: Graph, X: Iterable[str]) -> frozenset[str]:
    """Return the smallest hereditary saturated set containing X."""
    return closure_stages(g, X)[-1]


def _is_hsat(g: Graph, H: frozenset[str], sink_set: frozenset[str]) -> bool:
    for v in H:
        if not g.reach[v] <= H:
            return False
    for v in g.vertices:
        if v in H or v in sink_set:
            continue
        if all(e.range in H for e in g.out_edges[v]):
            return False
    return True


def _exhaustive(g: Graph) -> list[frozenset[str]]:
    names = sorted(g.vertices)
    sink_set = sinks(g)
    found = []
    for size in range(len(names) + 1):
        for members in combinations(names, size):
            H = frozenset(members)
            if _is_hsat(g, H, sink_set):
                found.append(H)
    return found


def _generated(g: Graph) -> list[frozenset[str]]:
    # Every H in 𝓗_E is the closure of the union of the closures of its members.
    lattice = {frozenset()} | {closure(g, [v]) for v in g.vertices}
    frontier = set(lattice)
    while frontier:
        fresh = set()
        for A in frontier:
            for B in list(lattice):
                joined = closure(g, A | B)
                if joined not in lattice:
                    fresh.add(joined)
        lattice |= fresh
        frontier = fresh
    return sorted(lattice, key=lattice_key)


def enumerate_hsat(g: Graph, *, context: Optional[Context] = None) -> list[frozenset[str]]:
    """List 𝓗_E sorted by size, then by the sorted member list.

    Exhaustive search is used up to ``context.bruteforce_threshold`` vertices.
    Above it the lattice is generated by joining closures of singletons, or
    :class:`ThresholdExceededError` is raised when generation is disabled.
    """
    context = context or Context()
    n = len(g.vertices)
    if n <= context.bruteforce_threshold:
        logger.debug(f"Enumerating 𝓗_E exhaustively over {2 ** n} subsets")
        return _exhaustive(g)
    if not context.lattice_generation:
        raise ThresholdExceededError(
            f"graph has {n} vertices, above the exhaustive threshold "
            f"{context.bruteforce_threshold}, and lattice generation is disabled"
        )
    logger.debug(f"Generating 𝓗_E from closures of {n} singletons")
    return _generated(g)


def is_hsat(g: Graph, H: Iterable[str]) -> bool:
    """Return whether H is hereditary and saturated."""
    return is_hereditary(g, H) and is_saturated(g, H)


__all__ = [
    "closure",
    "closure_stages",
    "enumerate_hsat",
    "is_hereditary",
    "is_hsat",
    "is_saturated",
    "lattice_key",
    "omega",
]
