"""Jitted twin of sources.py.

The kernel sources are executed into this module's namespace and then
wrapped with numba's @njit in place, so the compiled kernels resolve
their helpers to the compiled versions while the plain `sources` module
stays pure Python for the numpy lane. This module has a real import
path, which keeps numba's on-disk cache loadable across processes.
"""

import pathlib

from numba import njit

NJIT_KWARGS = {"cache": True, "nogil": True}

_WRAPPED = (
    "_table_set",
    "_undo_to",
    "_assign_propagate",
    "reduce_letters",
    "law_scan_pairs",
    "coset_feasible",
    "enumerate_tables",
)

_path = pathlib.Path(__file__).with_name("sources.py")
exec(compile(_path.read_text(encoding="utf-8"), str(_path), "exec"), globals())

for _name in _WRAPPED:
    globals()[_name] = njit(**NJIT_KWARGS)(globals()[_name])
del _name
