"""Numba switch.

``RESTRICT_LAB_NUMBA=0`` forces the pure-numpy kernels; otherwise numba is
used when importable.
"""
import os

try:
    import numba as _numba
except ImportError:  # pragma: no cover
    _numba = None


def numba_enabled() -> bool:
    flag = os.environ.get("RESTRICT_LAB_NUMBA", "1").strip().lower()
    return _numba is not None and flag not in ("0", "false", "no", "off")


def njit(*args, **kwargs):
    """``numba.njit`` when numba is installed, identity decorator otherwise."""
    if _numba is None:  # pragma: no cover
        if args and callable(args[0]):
            return args[0]
        return lambda f: f
    kwargs.setdefault("cache", True)
    return _numba.njit(*args, **kwargs)
