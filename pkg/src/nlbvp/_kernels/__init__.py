"""Backend selection for the batched secular-root kernels.

The compiled extension is preferred; the numpy implementation in
``fallback`` is used when the extension was not built or when
``NLBVP_PURE_PYTHON=1`` is set.  Both backends implement the same four
functions and agree to roundoff (enforced by the test suite).
"""

from __future__ import annotations

import os

if os.environ.get("NLBVP_PURE_PYTHON") == "1":
    from nlbvp._kernels import fallback as _impl

    BACKEND = "fallback"
else:
    try:
        from nlbvp._kernels import _speedups as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from nlbvp._kernels import fallback as _impl  # type: ignore[no-redef]

        BACKEND = "fallback"

cot_roots = _impl.cot_roots
tan_roots = _impl.tan_roots
cot_root_power_sum = _impl.cot_root_power_sum
tan_root_power_sum = _impl.tan_root_power_sum


def backend_name() -> str:
    """Name of the kernel backend selected at import time."""
    return BACKEND
