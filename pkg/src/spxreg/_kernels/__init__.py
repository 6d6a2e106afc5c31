"""Hot per-pixel kernels with a compiled fast path.

The Cython extension ``_ckernels`` is preferred when built; otherwise the
numpy fallback ``_pykernels`` is used.  Set ``SPXREG_PURE=1`` to force the
fallback (useful for benchmarking and testing backend equivalence).
"""

from __future__ import annotations

import os

if os.environ.get("SPXREG_PURE"):
    from . import _pykernels as _impl
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pykernels as _impl

BACKEND = _impl.BACKEND
label_components = _impl.label_components
boundary_mask = _impl.boundary_mask
transition_mask = _impl.transition_mask
rasterize_convex = _impl.rasterize_convex
chebyshev_match = _impl.chebyshev_match

__all__ = [
    "BACKEND",
    "label_components",
    "boundary_mask",
    "transition_mask",
    "rasterize_convex",
    "chebyshev_match",
]
