"""Define the runtime settings of the analysis library."""

import os
from dataclasses import dataclass, field, fields

from dotenv import load_dotenv

from leavitt_spectrum.errors import ConfigError

# Load environment variables
load_dotenv()

ENV_PREFIX = "LEAVITT_"

_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off"}


def _coerce(name: str, raw: str, default: object) -> object:
    if isinstance(default, bool):
        lowered = raw.strip().lower()
        if lowered in _TRUE:
            return True
        if lowered in _FALSE:
            return False
        raise ConfigError(f"{ENV_PREFIX}{name.upper()}: expected a boolean, got {raw!r}")
    if isinstance(default, int):
        try:
            return int(raw)
        except ValueError as exc:
            raise ConfigError(
                f"{ENV_PREFIX}{name.upper()}: expected an integer, got {raw!r}"
            ) from exc
    return raw


@dataclass(kw_only=True)
class Context:
    """Settings shared by the library and the command line."""

    bruteforce_threshold: int = 20
    """Largest vertex count for which the hereditary saturated lattice is found by exhaustive search."""

    lattice_generation: bool = True
    """Above the threshold, generate the lattice from closures of singletons instead of failing."""

    default_field: str = field(
        default="gf:2",
        metadata={"description": "Coefficient field: 'q' or 'gf:P' for a prime P."},
    )

    default_max_degree: int = 2
    """Degree bound for enumerating Laurent primes."""

    hedge_bound: int = 4
    """Default truncation length for the entering paths of the hedge graph."""

    oracle_limit: int = 12
    """Size bound of the brute-force reference implementations."""

    log_level: str = "WARNING"

    def __post_init__(self):
        """Fetch env vars for attributes that were not passed as args."""
        for f in fields(self):
            if not f.init:
                continue

            if getattr(self, f.name) == f.default:
                raw = os.environ.get(f"{ENV_PREFIX}{f.name.upper()}")
                if raw is not None:
                    setattr(self, f.name, _coerce(f.name, raw, f.default))

    @classmethod
    def from_env(cls) -> "Context":
        """Build a context from defaults and environment overrides."""
        return cls()


__all__ = ["Context", "ENV_PREFIX"]
