"""Margin-loss kernels with a compiled core and a numpy fallback.

The compiled extension (``divsim._kernels._core``, built from ``_core.pyx``)
is preferred; when it is missing, or when ``DIVSIM_BACKEND=numpy`` is set in
the environment, the pure-numpy implementation takes over. Both backends
expose identical functions, so callers go through this module's attributes
and never notice the difference (beyond speed).

``use_backend()`` rebinds the public functions at runtime; the benchmark and
the backend-equivalence tests rely on it.
"""

from __future__ import annotations

import os

from . import _numpy

_BACKENDS = {"numpy": _numpy}

try:
    from . import _core

    _BACKENDS["compiled"] = _core
except ImportError:
    pass

_KERNEL_NAMES = (
    "logistic_loss",
    "logistic_loss_sum",
    "logistic_loss_sum_grad",
    "logistic_curvature",
    "smooth_hinge_loss",
    "smooth_hinge_loss_sum",
    "smooth_hinge_loss_sum_grad",
    "smooth_hinge_curvature",
)

BACKEND = ""


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def use_backend(name: str) -> None:
    """Bind this module's kernel functions to the named backend."""
    global BACKEND
    if name not in _BACKENDS:
        raise ValueError(f"unknown kernel backend {name!r}; available: {available_backends()}")
    impl = _BACKENDS[name]
    for fn in _KERNEL_NAMES:
        globals()[fn] = getattr(impl, fn)
    BACKEND = name


_default = os.environ.get("DIVSIM_BACKEND", "").lower()
if not _default:
    _default = "compiled" if "compiled" in _BACKENDS else "numpy"
use_backend(_default)
