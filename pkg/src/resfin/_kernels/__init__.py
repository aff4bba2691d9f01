"""Hot kernels with two interchangeable backends.

RESFIN_BACKEND=numba (default) compiles the kernel sources with numba's
@njit; RESFIN_BACKEND=numpy runs them as plain Python, with the pair scan
swapped for a vectorized numpy implementation. Both lanes stay importable
side by side (see implementations()) so tests and the backend benchmark
can compare them directly.
"""

import os

from . import numpylane, sources

try:
    import numba  # noqa: F401

    HAS_NUMBA = True
except ImportError:  # pragma: no cover
    HAS_NUMBA = False

_KERNELS = (
    "reduce_letters",
    "law_scan_pairs",
    "coset_feasible",
    "enumerate_tables",
)

_requested = os.environ.get("RESFIN_BACKEND", "").strip().lower()
if _requested not in ("", "numba", "numpy"):
    raise RuntimeError(
        f"RESFIN_BACKEND must be 'numba' or 'numpy', got {_requested!r}"
    )
if _requested == "numba" and not HAS_NUMBA:  # pragma: no cover
    raise RuntimeError("RESFIN_BACKEND=numba requested but numba is not installed")
BACKEND = _requested or ("numba" if HAS_NUMBA else "numpy")

_PY_LANE = {
    "reduce_letters": sources.reduce_letters,
    "law_scan_pairs": numpylane.law_scan_pairs_numpy,
    "coset_feasible": sources.coset_feasible,
    "enumerate_tables": sources.enumerate_tables,
}


def _jit_lane():
    from . import _jit_sources

    return {name: getattr(_jit_sources, name) for name in _KERNELS}


_active = _jit_lane() if BACKEND == "numba" else _PY_LANE


def implementations():
    """Mapping backend name -> kernel dict, for tests and benchmarks."""
    lanes = {"numpy": _PY_LANE}
    if HAS_NUMBA:
        lanes["numba"] = _jit_lane()
    return lanes


reduce_letters = _active["reduce_letters"]
law_scan_pairs = _active["law_scan_pairs"]
coset_feasible = _active["coset_feasible"]
enumerate_tables = _active["enumerate_tables"]
