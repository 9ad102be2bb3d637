"""Kernel backend selection.

The compiled Cython extension is used when it imports; otherwise the
pure-Python module with the same interface. Setting ``KDIS_PURE_PYTHON=1``
forces the fallback.
"""

from __future__ import annotations

import os
from types import ModuleType

from kdis import _pykernels

python_kernels: ModuleType = _pykernels
compiled_kernels: ModuleType | None

try:
    from kdis import _ckernels as compiled_kernels
except ImportError:  # extension not built
    compiled_kernels = None

if compiled_kernels is not None and not os.environ.get("KDIS_PURE_PYTHON"):
    active: ModuleType = compiled_kernels
    BACKEND = "cython"
else:
    active = _pykernels
    BACKEND = "python"

MAX_KEY_VERTICES = _pykernels.MAX_KEY_VERTICES
