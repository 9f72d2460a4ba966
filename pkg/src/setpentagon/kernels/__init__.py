"""Hot loops behind the algebraic checks and exhaustive scans.

Two interchangeable backends implement the same functions:

* ``numba`` -- compiled loops with early exit (default when numba imports);
* ``numpy`` -- batched, vectorized fallback.

Set ``SETPENTAGON_BACKEND=numpy`` before import to force the fallback.
All tables passed in must be C-contiguous ``int64`` arrays.
"""
import importlib
import logging
import os

import numpy as np

log = logging.getLogger(__name__)

ENV_FLAG = "SETPENTAGON_BACKEND"

__all__ = [
    "BACKEND", "get_backend", "as_table",
    "assoc_failure", "pentagon_failure", "reversed_failure",
    "commutative_failure", "cocommutative_failure", "conditions_failure",
    "theta_scan", "star_scan", "dot_scan", "endo_scan",
]


def get_backend(name):
    """Import and return the kernel module called ``name``."""
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown kernel backend {name!r}")
    return importlib.import_module(f"{__name__}._{name}")


def _select():
    wanted = os.environ.get(ENV_FLAG, "numba").strip().lower() or "numba"
    if wanted == "numpy":
        return get_backend("numpy")
    try:
        return get_backend(wanted)
    except ImportError:
        log.warning("numba unavailable, falling back to numpy kernels")
        return get_backend("numpy")


def as_table(a):
    return np.ascontiguousarray(a, dtype=np.int64)


_impl = _select()
BACKEND = _impl.NAME

assoc_failure = _impl.assoc_failure
pentagon_failure = _impl.pentagon_failure
reversed_failure = _impl.reversed_failure
commutative_failure = _impl.commutative_failure
cocommutative_failure = _impl.cocommutative_failure
conditions_failure = _impl.conditions_failure
theta_scan = _impl.theta_scan
star_scan = _impl.star_scan
dot_scan = _impl.dot_scan
endo_scan = _impl.endo_scan
