"""Kernel selection.

The compiled extension is used when it imports; otherwise the pure-Python
kernels take over.  Setting ``LISTACCESS_PURE_PYTHON=1`` forces the
fallback.
"""

import importlib
import os

_NAMES = {"cython": "listaccess._ckernels", "python": "listaccess._pykernels"}


def load(name):
    """Import one backend by name (``"cython"`` or ``"python"``)."""
    return importlib.import_module(_NAMES[name])


def available():
    found = []
    for name in _NAMES:
        try:
            load(name)
        except ImportError:
            continue
        found.append(name)
    return found


if os.environ.get("LISTACCESS_PURE_PYTHON", "") not in ("", "0"):
    BACKEND = "python"
    kernels = load("python")
else:
    try:
        kernels = load("cython")
        BACKEND = "cython"
    except ImportError:
        kernels = load("python")
        BACKEND = "python"
