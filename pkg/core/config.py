"""Guard limits for exhaustive enumerations, read from the environment (.env via python-dotenv)."""

import os
from dataclasses import dataclass, replace

DEFAULT_MAX_LENGTH = 12
DEFAULT_MAX_DIM = 6
DEFAULT_MAX_RESULTS = 200_000

_ENV_KEYS = {
    "max_length": "QUIVERLAB_MAX_LENGTH",
    "max_dim": "QUIVERLAB_MAX_DIM",
    "max_results": "QUIVERLAB_MAX_RESULTS",
}
_DEFAULTS = {
    "max_length": DEFAULT_MAX_LENGTH,
    "max_dim": DEFAULT_MAX_DIM,
    "max_results": DEFAULT_MAX_RESULTS,
}


@dataclass(frozen=True)
class Guards:
    max_length: int = DEFAULT_MAX_LENGTH
    max_dim: int = DEFAULT_MAX_DIM
    max_results: int = DEFAULT_MAX_RESULTS

    def check(self, guard: str, value: int) -> None:
        """Raise GuardExceeded if value is above the named limit."""
        from core.errors import GuardExceeded

        limit = getattr(self, guard)
        if value > limit:
            raise GuardExceeded(guard, limit, value)

    def with_overrides(self, **overrides: int | None) -> "Guards":
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


def _env_int(key: str) -> int | None:
    raw = os.getenv(key)
    if raw is None or raw.strip() == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{key} must be an integer, got {raw!r}")


def current_guards() -> Guards:
    """Returns guards from the environment: specific keys win over QUIVERLAB_MAX_GUARD."""
    global_override = _env_int("QUIVERLAB_MAX_GUARD")
    values = {}
    for name, key in _ENV_KEYS.items():
        specific = _env_int(key)
        if specific is not None:
            values[name] = specific
        elif global_override is not None:
            values[name] = global_override
        else:
            values[name] = _DEFAULTS[name]
    return Guards(**values)


def resolve(guards: Guards | None) -> Guards:
    return guards if guards is not None else current_guards()


def log_level() -> str:
    return os.getenv("QUIVERLAB_LOG_LEVEL", "WARNING").upper()
