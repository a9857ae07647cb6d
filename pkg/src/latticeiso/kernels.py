"""Hot kernels, compiled when available.

The Cython build (``_speedups``) is preferred; the pure-Python twin
(``_purepy``) is used when the extension is missing or when the environment
variable ``LATTICEISO_PURE`` is set to a non-empty value.
"""

import os

if os.environ.get("LATTICEISO_PURE"):
    from . import _purepy as _impl
else:
    try:
        from . import _speedups as _impl
    except ImportError:  # extension not built
        from . import _purepy as _impl

BACKEND = _impl.BACKEND
boundary_size = _impl.boundary_size
enumerate_candidates = _impl.enumerate_candidates

__all__ = ["BACKEND", "boundary_size", "enumerate_candidates"]
