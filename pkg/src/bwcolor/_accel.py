"""Backend selection for the hot numeric kernels.

Two interchangeable code paths exist for every kernel: a numba-jitted loop
and a vectorized pure-numpy fallback.  Both produce bit-identical results;
only speed differs.  Set the environment variable BWCOLOR_NO_NUMBA=1 to
force the numpy path (it is also used automatically when numba is absent).
"""

import os

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    numba = None
    HAVE_NUMBA = False


def numba_enabled() -> bool:
    if os.environ.get("BWCOLOR_NO_NUMBA", "") not in ("", "0"):
        return False
    return HAVE_NUMBA


def njit(func):
    """Jit the function when numba is available, else return it unchanged."""
    if HAVE_NUMBA:
        return numba.njit(cache=True)(func)
    return func
