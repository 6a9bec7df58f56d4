"""Backend selection for the dense row-reduction kernel.

The compiled Cython module is used when it imports; otherwise the numpy
implementation is.  Setting ``SKEWCOH_PURE_PYTHON=1`` forces the fallback.
"""
from __future__ import annotations

import os

from . import _dense_py

try:
    if os.environ.get("SKEWCOH_PURE_PYTHON"):
        raise ImportError("pure-python backend forced by environment")
    from . import _dense as _dense_c
except ImportError:
    _dense_c = None

_BACKENDS = {"python": _dense_py.rref_inplace}
if _dense_c is not None:
    _BACKENDS["cython"] = _dense_c.rref_inplace

_active = "cython" if _dense_c is not None else "python"


def available_backends() -> list[str]:
    return sorted(_BACKENDS)


def get_backend() -> str:
    return _active


def set_backend(name: str) -> None:
    global _active
    if name not in _BACKENDS:
        raise ValueError(f"backend {name!r} not available (have {available_backends()})")
    _active = name


def dense_rref_inplace(a, p: int, backend: str | None = None):
    return _BACKENDS[backend or _active](a, p)
