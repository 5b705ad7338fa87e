"""Pick the compiled kernels when importable, else the pure-Python scans.

Set ``TWOCAT_PURE_PYTHON=1`` to force the fallback (used by the benchmark and
by the parity tests).
"""

import os

from . import _kernels_py

if os.environ.get("TWOCAT_PURE_PYTHON") == "1":
    kernels = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as kernels
        BACKEND = "compiled"
    except ImportError:
        kernels = _kernels_py
        BACKEND = "python"

__all__ = ["kernels", "BACKEND"]
