"""The prime spectrum of L_K(E) and the prime, primitive and simple tests.

Prime ideals of L_K(E) are in bijection with M(E) ∪ (M_τ(E) × Spec(K[x,x⁻¹])*).
A maximal tail M gives the graded prime I(E⁰ \\ M). A τ-tail M paired
with a nonzero prime P of K[x,x⁻¹] gives a nongraded prime: in the quotient
graph F = E/(E⁰ \\ M) there is a unique cycle μ without exits, the ideal
generated by the closure of μ⁰ is isomorphic to M_n(K[x,x⁻¹]), and P is
transported along that isomorphism.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Iterable, Literal, Optional, Sequence, Union

from leavitt_spectrum.constructions import (
    DerivedGraph,
    entering_paths_finite,
    hedge_graph,
    quotient_graph,
)
from leavitt_spectrum.context import Context
from leavitt_spectrum.cycles import (
    Cycle,
    comet_matrix_size,
    exitless_cycles,
    is_comet,
)
from leavitt_spectrum.errors import InvariantViolation, PreconditionError
from leavitt_spectrum.graph import Graph
from leavitt_spectrum.laurent import (
    FieldSpec,
    LaurentPrime,
    Rationals,
    enumerate_laurent_primes,
)
from leavitt_spectrum.lattice import closure, enumerate_hsat
from leavitt_spectrum.tails import (
    MaximalTail,
    TailKind,
    enumerate_maximal_tails,
    mt3_counterexample,
)

logger = logging.getLogger(__name__)

INFINITE = "infinite"

MatrixSize = Union[int, Literal["infinite"]]


@dataclass(frozen=True)
class NonGradedStructure:
    """Graph data shared by every nongraded prime over one τ-tail."""

    quotient: DerivedGraph
    """F = E/H for H the complement of the tail."""

    mu: Cycle
    """The unique cycle of F without exits."""

    mu_closure: frozenset[str]
    """Hereditary saturated closure of μ⁰ inside F."""

    matrix_size: MatrixSize
    """n with I(closure of μ⁰) ≅ M_n(K[x,x⁻¹]); ``"infinite"`` when n is not finite."""


@dataclass(frozen=True)
class GradedPrime:
    """The graded prime I(H), with M = E⁰ \\ H a maximal tail."""

    H: frozenset[str]
    tail: MaximalTail

    @property
    def is_graded(self) -> bool:
        return True


@dataclass(frozen=True)
class NonGradedPrime:
    """The nongraded prime attached to a τ-tail and a Laurent prime."""

    H: frozenset[str]
    tail: MaximalTail
    prime: LaurentPrime
    structure: NonGradedStructure

    def __post_init__(self):
        """Only τ-tails carry nongraded primes."""
        if self.tail.kind is not TailKind.TAU:
            raise PreconditionError("nongraded primes need a tail of kind tau")

    @property
    def is_graded(self) -> bool:
        return False


PrimeIdealDescriptor = Union[GradedPrime, NonGradedPrime]


@dataclass(frozen=True)
class UnrelatedPair:
    """Two vertices with no common vertex below both: (MT3) fails."""

    v: str
    w: str

    def describe(self) -> str:
        return f"no vertex lies below both {self.v} and {self.w}"

    def to_dict(self) -> dict[str, Any]:
        return {"type": "unrelated_pair", "vertices": [self.v, self.w]}


@dataclass(frozen=True)
class ExitlessCycle:
    """A cycle without exits: Condition (L) fails."""

    cycle: Cycle

    def describe(self) -> str:
        return f"exitless cycle {self.cycle}"

    def to_dict(self) -> dict[str, Any]:
        return {"type": "exitless_cycle", "cycle": list(self.cycle.edge_names)}


@dataclass(frozen=True)
class ProperHereditarySaturated:
    """A hereditary saturated set other than ∅ and E⁰: a proper graded ideal."""

    H: frozenset[str]

    def describe(self) -> str:
        return "proper nonzero hereditary saturated set {" + ", ".join(sorted(self.H)) + "}"

    def to_dict(self) -> dict[str, Any]:
        return {"type": "proper_hereditary_saturated", "H": sorted(self.H)}


@dataclass(frozen=True)
class EmptyGraph:
    """The graph has no vertices, so L_K(E) is the zero ring."""

    def describe(self) -> str:
        return "the graph has no vertices"

    def to_dict(self) -> dict[str, Any]:
        return {"type": "empty_graph"}


Witness = Union[UnrelatedPair, ExitlessCycle, ProperHereditarySaturated, EmptyGraph]


@dataclass(frozen=True)
class Verdict:
    """Outcome of a ring-theoretic test, with a witness when it fails."""

    holds: bool
    witness: Optional[Witness] = None

    def __bool__(self) -> bool:
        return self.holds


class AlgebraKind(str, Enum):
    """Algebras recognised from the shape of the graph."""

    MATRIX_OVER_FIELD = "matrix_over_field"
    LAURENT_RING = "laurent_ring"
    LEAVITT_ALGEBRA = "leavitt_algebra"
    TOEPLITZ = "toeplitz"
    MATRIX_OVER_LAURENT = "matrix_over_laurent"
    UNRECOGNIZED = "unrecognized"


@dataclass(frozen=True)
class AlgebraDescriptor:
    """A recognised isomorphism type of L_K(E) with the data that shows it."""

    kind: AlgebraKind
    size: Optional[int] = None
    witness: Optional[dict[str, Any]] = None

    @property
    def label(self) -> str:
        if self.kind is AlgebraKind.MATRIX_OVER_FIELD:
            return f"M_{self.size}(K)"
        if self.kind is AlgebraKind.LAURENT_RING:
            return "K[x,x^-1]"
        if self.kind is AlgebraKind.LEAVITT_ALGEBRA:
            return f"L(1,{self.size})"
        if self.kind is AlgebraKind.TOEPLITZ:
            return "Toeplitz algebra"
        if self.kind is AlgebraKind.MATRIX_OVER_LAURENT:
            return f"M_{self.size}(K[x,x^-1])"
        return "unrecognized"


def graded_primes(g: Graph, *, context: Optional[Context] = None) -> list[GradedPrime]:
    """Return I(E⁰ \\ M) for every maximal tail M, in tail order.

    The zero ideal (H = ∅) appears exactly when E⁰ is itself a maximal tail.
    """
    return [
        GradedPrime(t.complement(g), t) for t in enumerate_maximal_tails(g, context=context)
    ]


def nongraded_structure(g: Graph, tail: MaximalTail) -> NonGradedStructure:
    """Build F = E/H, its exitless cycle μ, the closure of μ⁰ and the matrix size.

    The size n is the comet size of the hedge graph of F over the closure of
    μ⁰. It is infinite when a cycle of F outside the closure feeds into it.
    """
    if tail.kind is not TailKind.TAU:
        raise PreconditionError(f"tail {sorted(tail.members)} has kind gamma")
    H = tail.complement(g)
    quotient = quotient_graph(g, H)
    F = quotient.graph

    candidates = exitless_cycles(F)
    if len(candidates) != 1:
        raise InvariantViolation(
            f"quotient by {sorted(H)} has {len(candidates)} cycles without exits, expected one"
        )
    mu = candidates[0]
    if tail.no_exit_cycle is None or tail.no_exit_cycle.edge_names != mu.edge_names:
        raise InvariantViolation(
            f"exitless cycle {mu} of the quotient differs from the tail's cycle {tail.no_exit_cycle}"
        )

    mu_closure = closure(F, mu.vertices)
    size: MatrixSize
    if not entering_paths_finite(F, mu_closure):
        size = INFINITE
    else:
        # every member of F_F(H) visits distinct vertices outside H
        hedge = hedge_graph(F, mu_closure, max(1, len(F.vertices)))
        if not is_comet(hedge.graph):
            raise InvariantViolation(f"hedge graph over closure of {mu} is not a comet")
        size = comet_matrix_size(hedge.graph)
    logger.debug(f"tail {sorted(tail.members)}: mu={mu}, closure={sorted(mu_closure)}, n={size}")
    return NonGradedStructure(quotient, mu, mu_closure, size)


def _prime_list(
    k: FieldSpec, max_degree: int, primes: Optional[Iterable[LaurentPrime]]
) -> list[LaurentPrime]:
    if primes is None:
        if isinstance(k, Rationals):
            return []
        return enumerate_laurent_primes(k, max_degree)
    unique = {p.sort_key(): p for p in primes}
    return [unique[key] for key in sorted(unique)]


def spectrum(
    g: Graph,
    k: FieldSpec,
    max_degree: int,
    *,
    primes: Optional[Sequence[LaurentPrime]] = None,
    context: Optional[Context] = None,
) -> list[PrimeIdealDescriptor]:
    """List the prime ideals of L_K(E).

    Graded primes come first in tail order, then one nongraded prime per
    τ-tail and Laurent prime, ordered by tail, degree and coefficients. The
    Laurent primes are those of degree at most ``max_degree`` over GF(p), or
    the given ``primes``. Over ℚ without ``primes`` the nongraded part is
    left out; it is infinite and reported symbolically.
    """
    tails = enumerate_maximal_tails(g, context=context)
    laurent = _prime_list(k, max_degree, primes)
    result: list[PrimeIdealDescriptor] = [GradedPrime(t.complement(g), t) for t in tails]
    for tail in tails:
        if tail.kind is not TailKind.TAU:
            continue
        structure = nongraded_structure(g, tail)
        H = tail.complement(g)
        result.extend(NonGradedPrime(H, tail, P, structure) for P in laurent)
    return result


def primes_over(
    g: Graph,
    H: Iterable[str],
    k: FieldSpec,
    max_degree: int,
    *,
    primes: Optional[Sequence[LaurentPrime]] = None,
    context: Optional[Context] = None,
) -> list[PrimeIdealDescriptor]:
    """Return the primes I with I ∩ E⁰ = H.

    Over a γ-tail complement only the graded prime lies over H.
    """
    H = g.check_vertices(H)
    return [
        d
        for d in spectrum(g, k, max_degree, primes=primes, context=context)
        if d.H == H
    ]


def is_prime_algebra(g: Graph) -> Verdict:
    """L_K(E) is prime iff E⁰ satisfies (MT3)."""
    if not g.vertices:
        return Verdict(False, EmptyGraph())
    pair = mt3_counterexample(g, g.vertices)
    if pair is not None:
        return Verdict(False, UnrelatedPair(*pair))
    return Verdict(True)


def is_primitive_algebra(g: Graph) -> Verdict:
    """L_K(E) is primitive iff E satisfies Condition (L) and (MT3)."""
    if not g.vertices:
        return Verdict(False, EmptyGraph())
    exitless = exitless_cycles(g)
    if exitless:
        return Verdict(False, ExitlessCycle(exitless[0]))
    pair = mt3_counterexample(g, g.vertices)
    if pair is not None:
        return Verdict(False, UnrelatedPair(*pair))
    return Verdict(True)


def is_simple_algebra(g: Graph, *, context: Optional[Context] = None) -> Verdict:
    """L_K(E) is simple iff E satisfies Condition (L) and 𝓗_E = {∅, E⁰}."""
    if not g.vertices:
        return Verdict(False, EmptyGraph())
    exitless = exitless_cycles(g)
    if exitless:
        return Verdict(False, ExitlessCycle(exitless[0]))
    for H in enumerate_hsat(g, context=context):
        if H and H != g.vertex_set:
            return Verdict(False, ProperHereditarySaturated(H))
    return Verdict(True)


def _line_order(g: Graph) -> Optional[list[str]]:
    n = len(g.vertices)
    if n == 0 or len(g.edges) != n - 1:
        return None
    if any(len(g.out_edges[v]) > 1 or len(g.in_edges[v]) > 1 for v in g.vertices):
        return None
    starts = [v for v in g.vertices if not g.in_edges[v]]
    if len(starts) != 1:
        return None
    order = [starts[0]]
    while g.out_edges[order[-1]] and len(order) <= n:
        order.append(g.out_edges[order[-1]][0].range)
    return order if len(order) == n else None


def recognize_algebra(g: Graph) -> AlgebraDescriptor:
    """Match the graph against shapes whose Leavitt path algebra is known.

    A line with n vertices gives M_n(K); one vertex with one loop gives
    K[x,x⁻¹]; one vertex with n ≥ 2 loops gives L(1,n); a loop with one exit
    to a sink gives the Toeplitz algebra; a comet gives M_n(K[x,x⁻¹]).
    """
    line = _line_order(g)
    if line is not None:
        return AlgebraDescriptor(AlgebraKind.MATRIX_OVER_FIELD, len(line), {"line": line})

    if len(g.vertices) == 1 and g.edges:
        loops = [e.name for e in g.edges]
        if len(loops) == 1:
            return AlgebraDescriptor(AlgebraKind.LAURENT_RING, None, {"loop": loops[0]})
        return AlgebraDescriptor(AlgebraKind.LEAVITT_ALGEBRA, len(loops), {"loops": loops})

    if len(g.vertices) == 2 and len(g.edges) == 2:
        loops = [e for e in g.edges if e.source == e.range]
        if len(loops) == 1:
            v = loops[0].source
            (other,) = [e for e in g.edges if e is not loops[0]]
            if other.source == v and other.range != v and not g.out_edges[other.range]:
                return AlgebraDescriptor(
                    AlgebraKind.TOEPLITZ,
                    None,
                    {"loop": loops[0].name, "exit": other.name, "sink": other.range},
                )

    if is_comet(g):
        n = comet_matrix_size(g)
        cycle = exitless_cycles(g)[0]
        return AlgebraDescriptor(
            AlgebraKind.MATRIX_OVER_LAURENT, n, {"cycle": list(cycle.edge_names)}
        )

    return AlgebraDescriptor(AlgebraKind.UNRECOGNIZED)


__all__ = [
    "INFINITE",
    "AlgebraDescriptor",
    "AlgebraKind",
    "EmptyGraph",
    "ExitlessCycle",
    "GradedPrime",
    "NonGradedPrime",
    "NonGradedStructure",
    "PrimeIdealDescriptor",
    "ProperHereditarySaturated",
    "UnrelatedPair",
    "Verdict",
    "graded_primes",
    "is_prime_algebra",
    "is_primitive_algebra",
    "is_simple_algebra",
    "nongraded_structure",
    "primes_over",
    "recognize_algebra",
    "spectrum",
]
