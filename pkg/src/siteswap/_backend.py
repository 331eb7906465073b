"""Pick the search kernel at import time.

The compiled module is preferred; ``SITESWAP_PURE_PYTHON=1`` forces the
fallback. Periods beyond the compiled mask width always use the fallback.
"""

import os

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

if _compiled is not None and not os.environ.get("SITESWAP_PURE_PYTHON"):
    kernels = _compiled
else:
    kernels = _kernels_py

BACKEND = kernels.NAME


def available():
    """Names of the kernels importable in this environment."""
    return ["python"] + (["cython"] if _compiled is not None else [])


def get(name=None):
    if name is None:
        return kernels
    if name == "python":
        return _kernels_py
    if name == "cython":
        if _compiled is None:
            raise ImportError("compiled kernel is not built")
        return _compiled
    raise ValueError(f"unknown backend {name!r}")


def for_period(n, name=None):
    k = get(name)
    if k is not _kernels_py and n > k.MAX_PERIOD:
        return _kernels_py
    return k
