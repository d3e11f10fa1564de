import pytest

from leavitt_spectrum.catalog import named_graph
from leavitt_spectrum.errors import PreconditionError, UnknownVertexError
from leavitt_spectrum.graph import Graph
from leavitt_spectrum.laurent import LaurentPrime, PrimeField, Rationals, parse_poly
from leavitt_spectrum.spectrum import (
    INFINITE,
    AlgebraKind,
    EmptyGraph,
    ExitlessCycle,
    GradedPrime,
    NonGradedPrime,
    ProperHereditarySaturated,
    UnrelatedPair,
    graded_primes,
    is_prime_algebra,
    is_primitive_algebra,
    is_simple_algebra,
    nongraded_structure,
    primes_over,
    recognize_algebra,
    spectrum,
)
from leavitt_spectrum.tails import enumerate_maximal_tails

GF2 = PrimeField(2)
Q = Rationals()


def loop_feeding_loop() -> Graph:
    """Loop c at u with an edge d into the exitless loop e at v."""
    return Graph.from_edges(["u", "v"], [("c", "u", "u"), ("d", "u", "v"), ("e", "v", "v")])


def describe(entries) -> list[tuple]:
    result = []
    for d in entries:
        if isinstance(d, GradedPrime):
            result.append(("graded", sorted(d.H)))
        else:
            result.append(("nongraded", sorted(d.tail.members), str(d.prime)))
    return result


@pytest.mark.parametrize(
    "name, expected",
    [
        ("TOEPLITZ", [([], ["v", "w"]), (["w"], ["v"])]),
        ("ROSE2", [([], ["v"])]),
        ("TWO_LOOPS", [(["w"], ["v"]), (["v"], ["w"])]),
    ],
)
def test_graded_primes(name: str, expected: list[tuple[list[str], list[str]]]) -> None:
    primes = graded_primes(named_graph(name))
    assert [(sorted(p.H), sorted(p.tail.members)) for p in primes] == expected


def test_spectrum_of_loop_over_gf2() -> None:
    assert describe(spectrum(named_graph("LOOP"), GF2, 2)) == [
        ("graded", []),
        ("nongraded", ["v"], "x+1"),
        ("nongraded", ["v"], "x^2+x+1"),
    ]


def test_spectrum_of_toeplitz_over_gf2() -> None:
    assert describe(spectrum(named_graph("TOEPLITZ"), GF2, 1)) == [
        ("graded", []),
        ("graded", ["w"]),
        ("nongraded", ["v"], "x+1"),
    ]


def test_spectrum_of_line_is_graded_only() -> None:
    entries = spectrum(named_graph("LINE3"), Q, 3)
    assert describe(entries) == [("graded", [])]


def test_spectrum_over_q_uses_supplied_primes() -> None:
    g = named_graph("LOOP")
    assert len(spectrum(g, Q, 2)) == 1
    primes = [
        LaurentPrime.from_poly(parse_poly("x^2-2", Q)),
        LaurentPrime.from_poly(parse_poly("x-1", Q)),
    ]
    entries = spectrum(g, Q, 2, primes=primes)
    assert describe(entries) == [
        ("graded", []),
        ("nongraded", ["v"], "x-1"),
        ("nongraded", ["v"], "x^2-2"),
    ]


def test_nongraded_structure_of_toeplitz() -> None:
    g = named_graph("TOEPLITZ")
    tau = enumerate_maximal_tails(g)[1]
    structure = nongraded_structure(g, tau)
    assert structure.quotient.graph == named_graph("LOOP")
    assert structure.mu.edge_names == ("e",)
    assert structure.mu_closure == frozenset({"v"})
    assert structure.matrix_size == 1


def test_nongraded_structure_of_comet_has_matrix_size_two() -> None:
    g = named_graph("COMET2")
    (tail,) = enumerate_maximal_tails(g)
    structure = nongraded_structure(g, tail)
    assert structure.mu_closure == frozenset({"v", "w"})
    assert structure.matrix_size == 2


def test_nongraded_structure_is_infinite_when_a_cycle_feeds_in() -> None:
    g = loop_feeding_loop()
    whole, upper = enumerate_maximal_tails(g)
    assert whole.members == frozenset({"u", "v"})
    assert nongraded_structure(g, whole).matrix_size == INFINITE
    assert nongraded_structure(g, upper).matrix_size == 1
    sizes = [d.structure.matrix_size for d in spectrum(g, GF2, 1) if not d.is_graded]
    assert sizes == [INFINITE, 1]


def test_nongraded_structure_needs_a_tau_tail() -> None:
    g = named_graph("TOEPLITZ")
    gamma = enumerate_maximal_tails(g)[0]
    with pytest.raises(PreconditionError):
        nongraded_structure(g, gamma)


def test_nongraded_prime_needs_a_tau_tail() -> None:
    g = named_graph("TOEPLITZ")
    gamma, tau = enumerate_maximal_tails(g)
    structure = nongraded_structure(g, tau)
    prime = LaurentPrime.from_poly(parse_poly("x+1", GF2))
    with pytest.raises(PreconditionError):
        NonGradedPrime(frozenset(), gamma, prime, structure)


@pytest.mark.parametrize(
    "H, expected",
    [(set(), 1), ({"w"}, 3), ({"v", "w"}, 0)],
    ids=["zero", "tau-complement", "everything"],
)
def test_primes_over(H: set[str], expected: int) -> None:
    entries = primes_over(named_graph("TOEPLITZ"), H, GF2, 2)
    assert len(entries) == expected
    assert all(d.H == frozenset(H) for d in entries)


def test_primes_over_rejects_unknown_vertices() -> None:
    with pytest.raises(UnknownVertexError):
        primes_over(named_graph("TOEPLITZ"), {"q"}, GF2, 2)


@pytest.mark.parametrize(
    "name, holds, witness",
    [
        ("LOOP", True, None),
        ("TOEPLITZ", True, None),
        ("TWO_LOOPS", False, UnrelatedPair("v", "w")),
    ],
)
def test_is_prime_algebra(name: str, holds: bool, witness) -> None:
    verdict = is_prime_algebra(named_graph(name))
    assert verdict.holds is holds
    assert verdict.witness == witness


def test_is_primitive_algebra() -> None:
    assert is_primitive_algebra(named_graph("TOEPLITZ"))
    assert is_primitive_algebra(named_graph("ROSE2"))
    verdict = is_primitive_algebra(named_graph("LOOP"))
    assert not verdict
    assert isinstance(verdict.witness, ExitlessCycle)
    assert verdict.witness.describe() == "exitless cycle (e)"


def test_is_simple_algebra() -> None:
    assert is_simple_algebra(named_graph("ROSE2"))
    assert is_simple_algebra(named_graph("LINE3"))
    verdict = is_simple_algebra(named_graph("TOEPLITZ"))
    assert not verdict
    assert verdict.witness == ProperHereditarySaturated(frozenset({"w"}))


@pytest.mark.parametrize("check", [is_prime_algebra, is_primitive_algebra, is_simple_algebra])
def test_empty_graph_fails_every_check(check) -> None:
    verdict = check(Graph(()))
    assert not verdict
    assert verdict.witness == EmptyGraph()


@pytest.mark.parametrize("name", ["LOOP", "COMET2", "C3"])
def test_tau_full_graph_is_prime_but_not_primitive(name: str) -> None:
    g = named_graph(name)
    tails = enumerate_maximal_tails(g)
    assert any(t.members == g.vertex_set and t.kind.value == "tau" for t in tails)
    assert is_prime_algebra(g)
    assert not is_primitive_algebra(g)


@pytest.mark.parametrize(
    "name, kind, size, label",
    [
        ("LINE3", AlgebraKind.MATRIX_OVER_FIELD, 3, "M_3(K)"),
        ("LOOP", AlgebraKind.LAURENT_RING, None, "K[x,x^-1]"),
        ("ROSE2", AlgebraKind.LEAVITT_ALGEBRA, 2, "L(1,2)"),
        ("TOEPLITZ", AlgebraKind.TOEPLITZ, None, "Toeplitz algebra"),
        ("COMET2", AlgebraKind.MATRIX_OVER_LAURENT, 2, "M_2(K[x,x^-1])"),
        ("C3", AlgebraKind.MATRIX_OVER_LAURENT, 3, "M_3(K[x,x^-1])"),
        ("TWO_LOOPS", AlgebraKind.UNRECOGNIZED, None, "unrecognized"),
    ],
)
def test_recognize_algebra(name: str, kind: AlgebraKind, size, label: str) -> None:
    algebra = recognize_algebra(named_graph(name))
    assert algebra.kind is kind
    assert algebra.size == size
    assert algebra.label == label


def test_single_vertex_is_the_field() -> None:
    assert recognize_algebra(Graph(("v",))).label == "M_1(K)"
