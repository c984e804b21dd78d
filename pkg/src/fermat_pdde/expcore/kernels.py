"""Backend selection for the batch evaluation kernels.

The compiled Cython module is preferred; the numpy fallback is used when
it is missing or when the environment variable ``FERMAT_PDDE_PUREPY`` is
set to a non-empty value other than ``0``.
"""
import os

from . import _pykernels

_force_py = os.environ.get("FERMAT_PDDE_PUREPY", "") not in ("", "0")

try:
    if _force_py:
        raise ImportError("pure-Python backend forced")
    from . import _ckernels as _impl
    BACKEND = "cython"
except ImportError:
    _impl = _pykernels
    BACKEND = "python"

poly_eval_batch = _impl.poly_eval_batch
exppoly_eval_batch = _impl.exppoly_eval_batch


def get_backend(name):
    """Return the kernel module for ``"cython"`` or ``"python"``."""
    if name == "python":
        return _pykernels
    if name == "cython":
        from . import _ckernels

        return _ckernels
    raise ValueError(f"unknown backend {name!r}")
