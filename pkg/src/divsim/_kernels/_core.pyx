# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled margin-loss kernels.

Single-pass fused loops over the margin array with libm exp/log1p; reductions
accumulate sequentially so results are independent of thread count. Semantics
match divsim._kernels._numpy, including the |z| > 30 asymptote short-circuit.
"""

from libc.math cimport exp, log1p

import numpy as np

cdef double CUTOFF = 30.0


cdef inline double _softplus(double z) noexcept nogil:
    if z > CUTOFF:
        return z
    if z < -CUTOFF:
        return 0.0
    return log1p(exp(z))


cdef inline double _sigmoid(double z) noexcept nogil:
    if z > CUTOFF:
        return 1.0
    if z < -CUTOFF:
        return 0.0
    return 1.0 / (1.0 + exp(-z))


def logistic_loss(double[::1] m):
    cdef Py_ssize_t i, n = m.shape[0]
    out_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    for i in range(n):
        out[i] = _softplus(-m[i])
    return out_arr


def logistic_loss_sum(double[::1] m):
    cdef Py_ssize_t i, n = m.shape[0]
    cdef double acc = 0.0
    for i in range(n):
        acc += _softplus(-m[i])
    return acc


def logistic_loss_sum_grad(double[::1] m):
    cdef Py_ssize_t i, n = m.shape[0]
    cdef double acc = 0.0
    grad_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] grad = grad_arr
    for i in range(n):
        acc += _softplus(-m[i])
        grad[i] = -_sigmoid(-m[i])
    return acc, grad_arr


def logistic_curvature(double[::1] m):
    cdef Py_ssize_t i, n = m.shape[0]
    cdef double s
    out_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    for i in range(n):
        s = _sigmoid(-m[i])
        out[i] = s * (1.0 - s)
    return out_arr


def smooth_hinge_loss(double[::1] m, double t):
    cdef Py_ssize_t i, n = m.shape[0]
    out_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    for i in range(n):
        out[i] = t * _softplus((1.0 - m[i]) / t)
    return out_arr


def smooth_hinge_loss_sum(double[::1] m, double t):
    cdef Py_ssize_t i, n = m.shape[0]
    cdef double acc = 0.0
    for i in range(n):
        acc += t * _softplus((1.0 - m[i]) / t)
    return acc


def smooth_hinge_loss_sum_grad(double[::1] m, double t):
    cdef Py_ssize_t i, n = m.shape[0]
    cdef double acc = 0.0, u
    grad_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] grad = grad_arr
    for i in range(n):
        u = (1.0 - m[i]) / t
        acc += t * _softplus(u)
        grad[i] = -_sigmoid(u)
    return acc, grad_arr


def smooth_hinge_curvature(double[::1] m, double t):
    cdef Py_ssize_t i, n = m.shape[0]
    cdef double s
    out_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    for i in range(n):
        s = _sigmoid((1.0 - m[i]) / t)
        out[i] = s * (1.0 - s) / t
    return out_arr
