"""Kernel dispatch: numba loops or the pure-numpy fallback.

Import the active implementation's functions from here; pull a specific
one with get_impl() when comparing the two (tests, benchmarks).
"""

from ramlab.backend import active_backend


def get_impl(name: str):
    if name == "numba":
        from ramlab._kernels import numba_impl
        return numba_impl
    if name == "numpy":
        from ramlab._kernels import numpy_impl
        return numpy_impl
    raise ValueError(f"unknown kernel backend {name!r}")


_impl = get_impl(active_backend())

NAME = _impl.NAME
chain_count_dp = _impl.chain_count_dp
chain_count_enum = _impl.chain_count_enum
pgl2_min_vec = _impl.pgl2_min_vec
pgl2_stab_count = _impl.pgl2_stab_count
branch_scan = _impl.branch_scan
exhaustive_scan = _impl.exhaustive_scan
