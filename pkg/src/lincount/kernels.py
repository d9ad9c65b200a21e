"""Backend selection for the inner loops.

The compiled module ``_ckernels`` is used when it has been built; otherwise
the pure-Python module is used. Set ``LINCOUNT_PURE_PYTHON=1`` to force the
fallback.
"""

import os

if os.environ.get("LINCOUNT_PURE_PYTHON", "") not in ("", "0"):
    from . import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "python"

horizontal_strips = _impl.horizontal_strips
vertical_strips = _impl.vertical_strips
lr_coefficients = _impl.lr_coefficients
lr_coefficient = _impl.lr_coefficient
count_fillings = _impl.count_fillings

__all__ = [
    "BACKEND",
    "horizontal_strips",
    "vertical_strips",
    "lr_coefficients",
    "lr_coefficient",
    "count_fillings",
]
