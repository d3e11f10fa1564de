import pytest

from leavitt_spectrum.catalog import named_graph
from leavitt_spectrum.context import Context
from leavitt_spectrum.errors import ThresholdExceededError, UnknownVertexError
from leavitt_spectrum.graph import Graph
from leavitt_spectrum.lattice import (
    closure,
    closure_stages,
    enumerate_hsat,
    is_hereditary,
    is_hsat,
    is_saturated,
    omega,
)


def fs(*names: str) -> frozenset[str]:
    return frozenset(names)


@pytest.mark.parametrize(
    "name, H, expected",
    [
        ("TOEPLITZ", {"w"}, True),
        ("TOEPLITZ", {"v"}, False),
        ("TOEPLITZ", set(), True),
        ("TOEPLITZ", {"v", "w"}, True),
        ("LINE3", {"u2", "u3"}, True),
    ],
)
def test_is_hereditary(name: str, H: set[str], expected: bool) -> None:
    assert is_hereditary(named_graph(name), H) is expected


@pytest.mark.parametrize(
    "name, H, expected",
    [
        ("TOEPLITZ", {"w"}, True),
        ("LINE3", {"u3"}, False),
        ("LINE3", {"u1", "u2", "u3"}, True),
        ("LOOP", set(), True),
    ],
)
def test_is_saturated(name: str, H: set[str], expected: bool) -> None:
    assert is_saturated(named_graph(name), H) is expected


@pytest.mark.parametrize(
    "X, expected",
    [({"v"}, {"w"}), ({"w"}, set()), ({"v", "w"}, set())],
    ids=["v", "w", "all"],
)
def test_omega(X: set[str], expected: set[str]) -> None:
    assert omega(named_graph("TOEPLITZ"), X) == frozenset(expected)


@pytest.mark.parametrize(
    "name, X, expected",
    [
        ("LINE3", {"u3"}, {"u1", "u2", "u3"}),
        ("TOEPLITZ", {"w"}, {"w"}),
        ("TOEPLITZ", {"v"}, {"v", "w"}),
        ("TOEPLITZ", set(), set()),
        ("LOOP", set(), set()),
    ],
)
def test_closure(name: str, X: set[str], expected: set[str]) -> None:
    assert closure(named_graph(name), X) == frozenset(expected)


def test_closure_stages_trace_the_saturation_chain() -> None:
    stages = closure_stages(named_graph("LINE3"), {"u3"})
    assert stages == [fs("u3"), fs("u2", "u3"), fs("u1", "u2", "u3")]


def test_closure_stages_stop_within_vertex_count() -> None:
    g = named_graph("LINE3")
    assert len(closure_stages(g, {"u3"})) - 1 <= len(g.vertices)


def test_closure_rejects_unknown_vertices() -> None:
    with pytest.raises(UnknownVertexError):
        closure(named_graph("LOOP"), {"x"})


@pytest.mark.parametrize(
    "name, expected",
    [
        ("TOEPLITZ", [fs(), fs("w"), fs("v", "w")]),
        ("ROSE2", [fs(), fs("v")]),
        ("TWO_LOOPS", [fs(), fs("v"), fs("w"), fs("v", "w")]),
        ("LINE3", [fs(), fs("u1", "u2", "u3")]),
    ],
)
def test_enumerate_hsat(name: str, expected: list[frozenset[str]]) -> None:
    assert enumerate_hsat(named_graph(name)) == expected


def test_enumerate_hsat_of_empty_graph() -> None:
    assert enumerate_hsat(Graph(())) == [fs()]


@pytest.mark.parametrize("name", ["TOEPLITZ", "TWO_LOOPS", "LINE3", "COMET2", "C3"])
def test_generated_lattice_matches_exhaustive_search(name: str) -> None:
    g = named_graph(name)
    generated = enumerate_hsat(g, context=Context(bruteforce_threshold=1))
    assert generated == enumerate_hsat(g, context=Context(bruteforce_threshold=20))


def test_threshold_without_generation_raises() -> None:
    context = Context(bruteforce_threshold=1, lattice_generation=False)
    with pytest.raises(ThresholdExceededError):
        enumerate_hsat(named_graph("TWO_LOOPS"), context=context)


def test_every_enumerated_set_is_hereditary_saturated() -> None:
    g = named_graph("TOEPLITZ")
    assert all(is_hsat(g, H) for H in enumerate_hsat(g))
