"""Kernel selection: compiled extension when available, pure Python otherwise.

The compiled max-flow works on 62-bit capacities; larger values (possible
after clearing huge rational denominators) are routed to the pure-Python
kernel, which uses arbitrary-precision integers.
"""

from . import _kernels_py

try:
    from . import _kernels  # type: ignore[attr-defined]
    BACKEND = "compiled"
except ImportError:
    _kernels = None
    BACKEND = "python"

_CAP_LIMIT = 1 << 62

gf_rank = _kernels.gf_rank if _kernels is not None else _kernels_py.gf_rank


def max_flow(n, edges, s, t):
    if _kernels is not None and all(c < _CAP_LIMIT for _, _, c in edges):
        return _kernels.max_flow(n, edges, s, t)
    return _kernels_py.max_flow(n, edges, s, t)
