"""Kernel backend selection.

Hot loops (census scans, orbit canonicalization, chain counting) exist in
two implementations: numba @njit loops and a pure-numpy vectorized path.
The active one is picked once per process from the RAMLAB_BACKEND
environment variable ("numba" or "numpy"); unset means numba when it is
importable, numpy otherwise.
"""

from __future__ import annotations

import os

ENV_VAR = "RAMLAB_BACKEND"

_active = None


def numba_available() -> bool:
    try:
        import numba  # noqa: F401
    except Exception:
        return False
    return True


def active_backend() -> str:
    global _active
    if _active is None:
        choice = os.environ.get(ENV_VAR, "").strip().lower()
        if choice == "numpy":
            _active = "numpy"
        elif choice == "numba":
            if not numba_available():
                raise RuntimeError(f"{ENV_VAR}=numba but numba is not importable")
            _active = "numba"
        elif choice == "":
            _active = "numba" if numba_available() else "numpy"
        else:
            raise ValueError(f"{ENV_VAR} must be 'numba' or 'numpy', got {choice!r}")
    return _active
