"""Kernel selection.

The compiled kernels are used when the extension imports; otherwise, or
when ``SQUAREHERON_PURE=1`` is set, the pure-Python versions are used.
Calls the compiled path cannot represent (128-bit overflow) fall back to
Python per call.
"""

from __future__ import annotations

import os

from . import _kernels_py

try:
    if os.environ.get("SQUAREHERON_PURE", "") not in ("", "0"):
        raise ImportError("pure-Python kernels forced")
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

BACKEND = "cython" if _compiled is not None else "python"


def _pick(backend: str | None):
    if backend is None:
        return _compiled or _kernels_py
    if backend == "python":
        return _kernels_py
    if backend == "cython":
        if _compiled is None:
            raise ImportError("compiled kernels are not built")
        return _compiled
    raise ValueError(f"unknown backend {backend!r}")


def two_square_hits(p_lo: int, p_hi: int, max_side: int, backend: str | None = None):
    mod = _pick(backend)
    try:
        return mod.two_square_hits(p_lo, p_hi, max_side)
    except OverflowError:
        return _kernels_py.two_square_hits(p_lo, p_hi, max_side)


def weierstrass_x_hits(a_num: int, a_den: int, u_lo: int, u_hi: int, w_max: int, backend: str | None = None):
    mod = _pick(backend)
    try:
        return mod.weierstrass_x_hits(a_num, a_den, u_lo, u_hi, w_max)
    except OverflowError:
        return _kernels_py.weierstrass_x_hits(a_num, a_den, u_lo, u_hi, w_max)
