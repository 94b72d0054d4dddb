"""Runtime bounds and backend selection.

Every bound can be overridden from the environment, e.g.
``GENFOULKES_PLETHYSM_BOUND=16``.  ``GENFOULKES_BACKEND=numpy`` disables the
numba kernels and runs the pure-numpy fallbacks instead.
"""

import os


class BoundExceeded(ValueError):
    """A requested computation is larger than a configured bound."""

    def __init__(self, what, value, bound, env):
        super().__init__(f"{what}={value} exceeds bound {bound} (raise with {env})")
        self.bound = bound


def _env_int(name, default):
    raw = os.environ.get(name)
    if raw is None:
        return default
    value = int(raw)
    if value <= 0:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


PLETHYSM_BOUND = _env_int("GENFOULKES_PLETHYSM_BOUND", 14)
CHARACTER_TABLE_BOUND = _env_int("GENFOULKES_CHARACTER_TABLE_BOUND", 16)
ORACLE_BOUND = _env_int("GENFOULKES_ORACLE_BOUND", 12)
ORACLE_TRACE_BOUND = _env_int("GENFOULKES_ORACLE_TRACE_BOUND", 10)
BRUTE_CHARACTER_BOUND = _env_int("GENFOULKES_BRUTE_CHARACTER_BOUND", 7)
BRUTE_PLETHYSM_BOUND = _env_int("GENFOULKES_BRUTE_PLETHYSM_BOUND", 10)

BACKEND = os.environ.get("GENFOULKES_BACKEND", "numba").lower()
if BACKEND not in ("numba", "numpy"):
    raise ValueError(f"GENFOULKES_BACKEND must be 'numba' or 'numpy', got {BACKEND!r}")


def check_bound(what, value, bound, env):
    if value > bound:
        raise BoundExceeded(what, value, bound, env)
