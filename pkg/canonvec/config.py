import os
from pathlib import Path

from canonvec.core.errors import ConfigError

# Defaults; every value can be overridden through the environment at call time.
BRUTE_FORCE_DEGREE = 9
ELEMENT_BOUND = 1_000_000
INTERSECTION_BOUND = 1_000_000
BOX_BOUND = 2_000_000
GRAPH_NODES = 9
DB_PATH = Path.home() / ".canonvec_history.db"
MAX_HISTORY = 500


def _int_from_env(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}")
    if value < 0:
        raise ConfigError(f"{name} must be non-negative, got {value}")
    return value


def brute_force_degree() -> int:
    """Largest n for which S_n is scanned element by element."""
    return _int_from_env("CANONVEC_BRUTE_FORCE_DEGREE", BRUTE_FORCE_DEGREE)


def element_bound() -> int:
    return _int_from_env("CANONVEC_ELEMENT_BOUND", ELEMENT_BOUND)


def intersection_bound() -> int:
    return _int_from_env("CANONVEC_INTERSECTION_BOUND", INTERSECTION_BOUND)


def box_bound() -> int:
    return _int_from_env("CANONVEC_BOX_BOUND", BOX_BOUND)


def graph_nodes() -> int:
    return _int_from_env("CANONVEC_GRAPH_NODES", GRAPH_NODES)


def max_history() -> int:
    return _int_from_env("CANONVEC_MAX_HISTORY", MAX_HISTORY)


def history_db_path() -> Path:
    raw = os.environ.get("CANONVEC_HISTORY_DB")
    return Path(raw).expanduser() if raw else DB_PATH
