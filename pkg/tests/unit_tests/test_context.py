import pytest

from leavitt_spectrum.context import Context
from leavitt_spectrum.errors import ConfigError


def test_context_init() -> None:
    context = Context(bruteforce_threshold=5)
    assert context.bruteforce_threshold == 5
    assert context.default_field == "gf:2"


def test_context_init_with_env_vars(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("LEAVITT_BRUTEFORCE_THRESHOLD", "7")
    monkeypatch.setenv("LEAVITT_DEFAULT_FIELD", "gf:3")
    context = Context()
    assert context.bruteforce_threshold == 7
    assert context.default_field == "gf:3"


def test_context_init_with_env_vars_and_passed_values(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("LEAVITT_HEDGE_BOUND", "9")
    context = Context(hedge_bound=2)
    assert context.hedge_bound == 2


@pytest.mark.parametrize("raw, expected", [("false", False), ("0", False), ("Yes", True)])
def test_boolean_env_vars(monkeypatch: pytest.MonkeyPatch, raw: str, expected: bool) -> None:
    monkeypatch.setenv("LEAVITT_LATTICE_GENERATION", raw)
    assert Context.from_env().lattice_generation is expected


@pytest.mark.parametrize(
    "name, raw",
    [("LEAVITT_ORACLE_LIMIT", "many"), ("LEAVITT_LATTICE_GENERATION", "maybe")],
)
def test_uncoercible_env_vars_raise(monkeypatch: pytest.MonkeyPatch, name: str, raw: str) -> None:
    monkeypatch.setenv(name, raw)
    with pytest.raises(ConfigError, match=name):
        Context()
