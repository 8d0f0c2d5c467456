"""Selects the compiled census kernel when available.

Set ``STAIRCASE_PURE_PYTHON=1`` to force the pure-Python twin.
"""

import os

from . import _kernel_py

BACKEND = "python"
census = _kernel_py.census
count = _kernel_py.count

if not os.environ.get("STAIRCASE_PURE_PYTHON"):
    try:
        from . import _ckernel
    except ImportError:
        pass
    else:
        census = _ckernel.census
        count = _ckernel.count
        BACKEND = "cython"
