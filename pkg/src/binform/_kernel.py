"""Backend selection for the GF(2^m) kernel.

The compiled kernel is used when it imports and accepts the modulus; the
pure-Python kernel is the fallback.  Set ``BINFORM_PURE_PYTHON=1`` to force
the fallback.
"""

import os

from . import _pykernel

try:
    if os.environ.get("BINFORM_PURE_PYTHON"):
        raise ImportError("pure-Python kernel forced by environment")
    from . import _ckernel
except ImportError:
    _ckernel = None

BACKENDS = {"python": _pykernel.Kernel}
if _ckernel is not None:
    BACKENDS["cython"] = _ckernel.Kernel

DEFAULT_BACKEND = "cython" if _ckernel is not None else "python"


def make_kernel(modulus, backend=None):
    """Return a kernel object with ``mul``, ``sqr``, ``inv`` and ``reduce``."""
    name = backend or DEFAULT_BACKEND
    try:
        cls = BACKENDS[name]
    except KeyError:
        raise ValueError(f"unknown or unavailable kernel backend {name!r}") from None
    if name == "python":
        return cls(modulus)
    try:
        return cls(modulus)
    except ValueError:
        if backend is not None:
            raise
        return _pykernel.Kernel(modulus)


def backend_name(kernel):
    return "python" if isinstance(kernel, _pykernel.Kernel) else "cython"
