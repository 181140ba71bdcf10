"""Pure-numpy margin-loss kernels (fallback backend).

Same surface as the compiled backend in ``_core.pyx``. Every function takes
an array of margins m = y * score and returns per-example quantities in
margin space; the caller maps back to parameter space.

Arguments |z| > 30 short-circuit to the asymptote of the curve, so exp()
never overflows and well-classified points contribute exact zeros.
"""

from __future__ import annotations

import numpy as np

CUTOFF = 30.0


def _softplus(z: np.ndarray) -> np.ndarray:
    zc = np.clip(z, -CUTOFF, CUTOFF)
    out = np.log1p(np.exp(zc))
    out[z > CUTOFF] = z[z > CUTOFF]
    out[z < -CUTOFF] = 0.0
    return out


def _sigmoid(z: np.ndarray) -> np.ndarray:
    zc = np.clip(z, -CUTOFF, CUTOFF)
    out = 1.0 / (1.0 + np.exp(-zc))
    out[z > CUTOFF] = 1.0
    out[z < -CUTOFF] = 0.0
    return out


# loss(m)      = log(1 + exp(-m))
# loss'(m)     = -sigmoid(-m)
# loss''(m)    = sigmoid(-m) * (1 - sigmoid(-m))


def logistic_loss(m: np.ndarray) -> np.ndarray:
    return _softplus(-np.asarray(m, dtype=np.float64))


def logistic_loss_sum(m: np.ndarray) -> float:
    return float(np.sum(logistic_loss(m)))


def logistic_loss_sum_grad(m: np.ndarray) -> tuple[float, np.ndarray]:
    m = np.asarray(m, dtype=np.float64)
    return float(np.sum(_softplus(-m))), -_sigmoid(-m)


def logistic_curvature(m: np.ndarray) -> np.ndarray:
    s = _sigmoid(-np.asarray(m, dtype=np.float64))
    return s * (1.0 - s)


# With u = (1 - m) / t:
# loss(m)      = t * log(1 + exp(u))
# loss'(m)     = -sigmoid(u)
# loss''(m)    = sigmoid(u) * (1 - sigmoid(u)) / t


def smooth_hinge_loss(m: np.ndarray, t: float) -> np.ndarray:
    u = (1.0 - np.asarray(m, dtype=np.float64)) / t
    return t * _softplus(u)


def smooth_hinge_loss_sum(m: np.ndarray, t: float) -> float:
    return float(np.sum(smooth_hinge_loss(m, t)))


def smooth_hinge_loss_sum_grad(m: np.ndarray, t: float) -> tuple[float, np.ndarray]:
    u = (1.0 - np.asarray(m, dtype=np.float64)) / t
    return float(np.sum(t * _softplus(u))), -_sigmoid(u)


def smooth_hinge_curvature(m: np.ndarray, t: float) -> np.ndarray:
    s = _sigmoid((1.0 - np.asarray(m, dtype=np.float64)) / t)
    return s * (1.0 - s) / t
