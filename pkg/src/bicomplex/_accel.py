"""Backend selection for the numeric kernels.

Set ``BICOMPLEX_DISABLE_NUMBA=1`` to force the pure-numpy code path even
when numba is importable.
"""
import os

DISABLE_ENV = "BICOMPLEX_DISABLE_NUMBA"

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None


def _flag_set(name):
    return os.environ.get(name, "").strip().lower() in {"1", "true", "yes", "on"}


USE_NUMBA = numba is not None and not _flag_set(DISABLE_ENV)


def njit(fn):
    """Compile ``fn`` with numba when available, else return it unchanged."""
    if numba is None:
        return fn
    return numba.njit(cache=True)(fn)


def backend_name():
    return "numba" if USE_NUMBA else "numpy"
