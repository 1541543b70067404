"""Backend selection for the polynomial kernels.

The compiled extension is used when it imports; otherwise the pure-Python
reference takes over. Setting ``CLUSTERCRYSTAL_PURE=1`` forces the
fallback, which is how the benchmark and the agreement tests pin a path.
"""
import os

from . import _purekernel

BACKEND = "python"
mul_dense = _purekernel.mul_dense
div_dense = _purekernel.div_dense

if os.environ.get("CLUSTERCRYSTAL_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernel
    except ImportError:  # extension not built
        _ckernel = None
    if _ckernel is not None:
        mul_dense = _ckernel.mul_dense
        div_dense = _ckernel.div_dense
        BACKEND = "cython"


def backends():
    """Return the available kernel implementations keyed by name."""
    out = {"python": _purekernel}
    try:
        from . import _ckernel as ck
        out["cython"] = ck
    except ImportError:
        pass
    return out
