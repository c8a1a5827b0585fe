"""Backend selection for the hot loops.

The compiled ``_kernels`` extension is used when it imports cleanly;
otherwise the pure-Python ``_pykernels`` module is used. Setting the
environment variable ``PCLAB_PURE_PYTHON=1`` forces the fallback.
"""
import os

from . import _pykernels as python_backend

compiled_backend = None
if not os.environ.get("PCLAB_PURE_PYTHON"):
    try:
        from . import _kernels as compiled_backend
    except ImportError:  # extension not built
        compiled_backend = None

_active = compiled_backend if compiled_backend is not None else python_backend
BACKEND = "compiled" if compiled_backend is not None else "python"


def backends():
    """Available backends as a ``{name: module}`` mapping."""
    out = {"python": python_backend}
    if compiled_backend is not None:
        out["compiled"] = compiled_backend
    return out


def convolve(a, b, n):
    return _active.convolve(list(a), list(b), n)


def convolve_mod(a, b, n, modulus):
    return _active.convolve_mod(list(a), list(b), n, modulus)


def inverse(a, n):
    return _active.inverse(list(a), n)


def inverse_mod(a, n, modulus):
    return _active.inverse_mod(list(a), n, modulus)


def partitions(nmax, prefix=None):
    return _active.partitions(nmax, prefix)


def partitions_mod(nmax, modulus):
    return _active.partitions_mod(nmax, modulus)


def two_color_mod(p, ell, nmax, modulus):
    return _active.two_color_mod(p, ell, nmax, modulus)
