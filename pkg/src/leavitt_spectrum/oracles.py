"""Brute-force reference implementations for testing.

Nothing here reuses the analysis modules; only the graph types are shared.
Every oracle works straight from the definitions by exhaustive search and is
meant for small instances only.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional

from leavitt_spectrum.context import Context
from leavitt_spectrum.errors import OracleLimitError
from leavitt_spectrum.graph import Edge, Graph


@dataclass(frozen=True)
class RandomGraphSpec:
    """Parameters of a seeded random multigraph."""

    min_vertices: int = 1
    max_vertices: int = 8
    min_edges: int = 0
    max_edges: int = 12
    seed: int = 0

    def generate(self) -> Graph:
        """Build the graph; the same spec always yields the same graph."""
        rng = random.Random(self.seed)
        n = rng.randint(self.min_vertices, self.max_vertices)
        m = rng.randint(self.min_edges, self.max_edges)
        vertices = tuple(f"v{i}" for i in range(n))
        edges = tuple(
            Edge(f"e{j}", rng.choice(vertices), rng.choice(vertices)) for j in range(m)
        )
        return Graph(vertices, edges)


def random_graph(spec: RandomGraphSpec) -> Graph:
    return spec.generate()


def corpus(count: int, *, first_seed: int = 0, **bounds) -> list[Graph]:
    """Return ``count`` random graphs with consecutive seeds."""
    return [
        RandomGraphSpec(seed=first_seed + i, **bounds).generate() for i in range(count)
    ]


def _limit(size: int, what: str, limit: Optional[int]) -> None:
    limit = Context().oracle_limit if limit is None else limit
    if size > limit:
        raise OracleLimitError(f"{what} {size} exceeds the oracle bound {limit}")


def _subsets(names: list[str]) -> Iterable[frozenset[str]]:
    for mask in range(1 << len(names)):
        yield frozenset(n for i, n in enumerate(names) if mask >> i & 1)


def brute_reaches(g: Graph, v: str, w: str) -> bool:
    """Search every edge sequence of length up to |E⁰|·|E¹| from v for one ending at w."""
    if v == w:
        return True
    bound = len(g.vertices) * len(g.edges)
    ends = {v}
    for _ in range(bound):
        ends = {e.range for e in g.edges if e.source in ends}
        if w in ends:
            return True
    return False


def _below(g: Graph) -> dict[str, set[str]]:
    return {v: {w for w in g.vertices if brute_reaches(g, v, w)} for v in g.vertices}


def _hereditary(g: Graph, below: dict[str, set[str]], H: frozenset[str]) -> bool:
    return all(w in H for v in H for w in below[v])


def _saturated(g: Graph, H: frozenset[str]) -> bool:
    for v in g.vertices:
        ranges = [e.range for e in g.edges if e.source == v]
        if ranges and v not in H and all(r in H for r in ranges):
            return False
    return True


def brute_closure(
    g: Graph,
    X: Iterable[str],
    *,
    limit: Optional[int] = None,
    lattice: Optional[list[frozenset[str]]] = None,
) -> frozenset[str]:
    """Return the inclusion-minimum hereditary saturated superset of X.

    ``lattice`` may pass in a previous :func:`brute_hsat` result for ``g`` to
    avoid rescanning all subsets.
    """
    X = frozenset(X)
    lattice = brute_hsat(g, limit=limit) if lattice is None else lattice
    candidates = [H for H in lattice if X <= H]
    minimum = [H for H in candidates if all(H <= other for other in candidates)]
    assert len(minimum) == 1, "hereditary saturated supersets have no minimum"
    return minimum[0]


def brute_hsat(g: Graph, *, limit: Optional[int] = None) -> list[frozenset[str]]:
    """Return every hereditary saturated subset, in no particular order."""
    _limit(len(g.vertices), "vertex count", limit)
    below = _below(g)
    return [
        H for H in _subsets(list(g.vertices)) if _hereditary(g, below, H) and _saturated(g, H)
    ]


def brute_mt(g: Graph, M: frozenset[str], below: Optional[dict[str, set[str]]] = None) -> tuple[bool, bool, bool]:
    """Evaluate (MT1), (MT2), (MT3) literally."""
    below = below or _below(g)
    mt1 = all(v in M for v in g.vertices for w in M if w in below[v])
    mt2 = all(
        any(e.range in M for e in g.edges if e.source == v)
        for v in M
        if any(e.source == v for e in g.edges)
    )
    mt3 = all(any(y in below[v] and y in below[w] for y in M) for v in M for w in M)
    return mt1, mt2, mt3


def brute_tails(g: Graph, *, limit: Optional[int] = None) -> list[frozenset[str]]:
    """Return every nonempty subset satisfying (MT1), (MT2) and (MT3)."""
    _limit(len(g.vertices), "vertex count", limit)
    below = _below(g)
    return [M for M in _subsets(list(g.vertices)) if M and all(brute_mt(g, M, below))]


def _rotate_canonical(edges: tuple[Edge, ...]) -> tuple[str, ...]:
    rotations = [edges[i:] + edges[:i] for i in range(len(edges))]
    best = min(rotations, key=lambda r: (r[0].source, r[0].name))
    return tuple(e.name for e in best)


def _chains(g: Graph, max_length: int) -> Iterable[tuple[Edge, ...]]:
    stack = [(e,) for e in g.edges]
    while stack:
        path = stack.pop()
        yield path
        if len(path) < max_length:
            stack.extend(path + (e,) for e in g.edges if e.source == path[-1].range)


def brute_cycles(g: Graph, *, limit: Optional[int] = None) -> list[tuple[str, ...]]:
    """Return the cycles of ``g`` as canonical edge-name tuples, sorted."""
    _limit(len(g.edges), "edge count", limit)
    found = set()
    for path in _chains(g, len(g.vertices)):
        closed = path[-1].range == path[0].source
        sources = [e.source for e in path]
        if closed and len(set(sources)) == len(sources):
            found.add(_rotate_canonical(path))
    return sorted(found)


def brute_comet_size(g: Graph, base: str, cycle: tuple[str, ...]) -> int:
    """Count paths ending at ``base`` that avoid the cycle ``cycle`` based there.

    ``cycle`` lists the edge names of the cycle starting at ``base``. Paths
    avoiding it have length below |E⁰|, so the search is finite.
    """
    count = 1  # the length-0 path at base
    for path in _chains(g, len(g.vertices)):
        if path[-1].range != base:
            continue
        names = tuple(e.name for e in path)
        k = len(cycle)
        if any(names[i:i + k] == cycle for i in range(len(names) - k + 1)):
            continue
        count += 1
    return count


def _poly_mul(f: tuple[int, ...], g: tuple[int, ...], p: int) -> tuple[int, ...]:
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = (out[i + j] + a * b) % p
    return tuple(out)


def brute_irreducibles(p: int, max_degree: int) -> list[tuple[int, ...]]:
    """Monic irreducibles over GF(p) with nonzero constant term, by factorisation.

    A monic polynomial of degree d is reducible iff it is the product of two
    monic polynomials of positive degree; every such product is generated and
    the complement is returned. Coefficients are listed constant term first.
    """
    def monic(d: int) -> list[tuple[int, ...]]:
        return [tuple(low) + (1,) for low in product(range(p), repeat=d)]

    result = []
    for d in range(1, max_degree + 1):
        reducible = {
            _poly_mul(a, b, p)
            for i in range(1, d)
            for a in monic(i)
            for b in monic(d - i)
        }
        result.extend(f for f in monic(d) if f not in reducible and f[0] != 0)
    return result


__all__ = [
    "RandomGraphSpec",
    "brute_closure",
    "brute_comet_size",
    "brute_cycles",
    "brute_hsat",
    "brute_irreducibles",
    "brute_mt",
    "brute_reaches",
    "brute_tails",
    "corpus",
    "random_graph",
]
