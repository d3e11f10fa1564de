"""Maximal tails and their split into M_γ(E) and M_τ(E)."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, NamedTuple, Optional

from leavitt_spectrum.context import Context
from leavitt_spectrum.cycles import Cycle, enumerate_cycles
from leavitt_spectrum.errors import InvariantViolation, PreconditionError
from leavitt_spectrum.graph import Graph
from leavitt_spectrum.lattice import enumerate_hsat

logger = logging.getLogger(__name__)


class TailKind(str, Enum):
    """Whether every cycle of a tail has an exit inside it (γ) or not (τ)."""

    GAMMA = "gamma"
    TAU = "tau"


class MTCheck(NamedTuple):
    """Outcome of the three maximal-tail conditions."""

    mt1: bool
    mt2: bool
    mt3: bool

    @property
    def all(self) -> bool:
        return self.mt1 and self.mt2 and self.mt3


@dataclass(frozen=True)
class MaximalTail:
    """A maximal tail M with its kind and its cycles lacking exits in M."""

    members: frozenset[str]
    kind: TailKind
    no_exit_cycles: tuple[Cycle, ...] = ()

    def __post_init__(self):
        """Check the kind against the exitless cycles."""
        if not self.members:
            raise PreconditionError("a maximal tail is nonempty")
        if (self.kind is TailKind.TAU) != bool(self.no_exit_cycles):
            raise InvariantViolation(
                f"tail {sorted(self.members)} has kind {self.kind.value} "
                f"but {len(self.no_exit_cycles)} exitless cycles"
            )
        if len(self.no_exit_cycles) > 1:
            raise InvariantViolation(
                f"tail {sorted(self.members)} carries several cycles without exits in it: "
                + ", ".join(str(c) for c in self.no_exit_cycles)
            )

    @property
    def no_exit_cycle(self) -> Optional[Cycle]:
        return self.no_exit_cycles[0] if self.no_exit_cycles else None

    def complement(self, g: Graph) -> frozenset[str]:
        """Return E⁰ \\ M, the hereditary saturated set of the tail."""
        return g.vertex_set - self.members


def _mt1(g: Graph, M: frozenset[str]) -> bool:
    return all(not (g.reach[v] & M) for v in g.vertices if v not in M)


def _mt2(g: Graph, M: frozenset[str]) -> bool:
    for v in M:
        out = g.out_edges[v]
        if out and not any(e.range in M for e in out):
            return False
    return True


def mt3_counterexample(g: Graph, M: Iterable[str]) -> Optional[tuple[str, str]]:
    """Return a pair v, w in M with no common y in M below both, if any.

    Reachability is taken in the whole graph.
    """
    M = g.check_vertices(M)
    names = sorted(M)
    for v, w in combinations(names, 2):
        if not (g.reach[v] & g.reach[w] & M):
            return v, w
    return None


def check_mt(g: Graph, M: Iterable[str]) -> MTCheck:
    """Evaluate (MT1), (MT2) and (MT3) for M ⊆ E⁰."""
    M = g.check_vertices(M)
    return MTCheck(_mt1(g, M), _mt2(g, M), mt3_counterexample(g, M) is None)


def no_exit_cycles(g: Graph, M: Iterable[str]) -> list[Cycle]:
    """Return the cycles inside M with no exit ranging in M."""
    M = g.check_vertices(M)
    result = []
    for c in enumerate_cycles(g):
        if not c.vertices <= M:
            continue
        own = set(c.edge_names)
        if not any(
            e.name not in own and e.range in M
            for v in c.vertices
            for e in g.out_edges[v]
        ):
            result.append(c)
    return result


def _build_tail(g: Graph, M: frozenset[str]) -> MaximalTail:
    cycles = tuple(no_exit_cycles(g, M))
    kind = TailKind.TAU if cycles else TailKind.GAMMA
    return MaximalTail(M, kind, cycles)


def tail_order(M: frozenset[str]) -> tuple[int, list[str]]:
    """Sort key of tails: larger tails first, then by sorted members."""
    return -len(M), sorted(M)


def enumerate_maximal_tails(g: Graph, *, context: Optional[Context] = None) -> list[MaximalTail]:
    """List M(E), each tail with its kind and exitless cycle.

    By the hereditary saturated complement correspondence, M satisfies
    (MT1) and (MT2) exactly when E⁰ \\ M ∈ 𝓗_E, so only (MT3) is checked on
    the complements of the lattice.
    """
    tails = []
    for H in enumerate_hsat(g, context=context):
        M = g.vertex_set - H
        if not M or mt3_counterexample(g, M) is not None:
            continue
        tails.append(_build_tail(g, M))
    tails.sort(key=lambda t: tail_order(t.members))
    logger.debug(
        f"Found {len(tails)} maximal tails, "
        f"{sum(t.kind is TailKind.TAU for t in tails)} of kind tau"
    )
    return tails


def tail_kind(g: Graph, M: Iterable[str]) -> TailKind:
    """Return γ or τ for a maximal tail M.

    Raises:
        PreconditionError: if M is not a maximal tail.
    """
    M = g.check_vertices(M)
    if not M or not check_mt(g, M).all:
        raise PreconditionError(f"{sorted(M)} is not a maximal tail")
    return _build_tail(g, M).kind


__all__ = [
    "MTCheck",
    "MaximalTail",
    "TailKind",
    "check_mt",
    "enumerate_maximal_tails",
    "mt3_counterexample",
    "no_exit_cycles",
    "tail_kind",
    "tail_order",
]
