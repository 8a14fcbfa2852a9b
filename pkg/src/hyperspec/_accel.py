"""Pick the compiled kernels when they import, else the pure-Python ones.

Set ``HYPERSPEC_PURE=1`` to force the fallback.
"""

import os

from . import _kernels_py

if os.environ.get("HYPERSPEC_PURE", "") not in ("", "0"):
    kernels = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]
        BACKEND = "cython"
    except ImportError:
        kernels = _kernels_py
        BACKEND = "python"

power_iteration = kernels.power_iteration
quadratic_form = kernels.quadratic_form
matvec = kernels.matvec
