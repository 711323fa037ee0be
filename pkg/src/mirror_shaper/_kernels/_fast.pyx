# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled per-step hot kernels.

Mirror of _kernels/pure.py. The arithmetic must stay bit-identical to the
NumPy fallback: same per-element operation order, no reassociation, and the
build uses -ffp-contract=off so the compiler cannot fuse multiply-adds.
"""

from libc.math cimport floor

import numpy as np

BACKEND_NAME = "compiled"


def encode(
    double[::1] point,
    const double[::1] lows,
    const double[::1] inv_widths,
    const double[:, ::1] offsets,
    int tiles_per_dim,
    long long[::1] out,
):
    cdef Py_ssize_t num_tilings = offsets.shape[0]
    cdef Py_ssize_t ndim = lows.shape[0]
    cdef long long edge = tiles_per_dim + 1
    cdef long long block = 1
    cdef Py_ssize_t k, d
    cdef long long cell, c
    cdef double scaled
    for d in range(ndim):
        block *= edge
    for k in range(num_tilings):
        cell = 0
        for d in range(ndim):
            scaled = (point[d] - lows[d]) * inv_widths[d]
            if scaled < 0.0:
                scaled = 0.0
            elif scaled > tiles_per_dim:
                scaled = <double> tiles_per_dim
            c = <long long> floor(scaled + offsets[k, d])
            cell = cell * edge + c
        out[k] = k * block + cell
    return np.asarray(out)


def dot_at(const double[::1] w, const long long[::1] idx):
    cdef double total = 0.0
    cdef Py_ssize_t j
    for j in range(idx.shape[0]):
        total += w[idx[j]]
    return total


def update_step(
    double[::1] w_mu,
    double[::1] w_sigma,
    double[::1] v,
    double[::1] e_mu,
    double[::1] e_sigma,
    double[::1] e_v,
    const long long[::1] x_idx,
    const long long[::1] xn_idx,
    double a,
    double mu,
    double sigma,
    double r,
    double alpha_v,
    double alpha_mu,
    double alpha_sigma,
    double gamma,
    double lambda_w,
    double lambda_v,
):
    cdef Py_ssize_t n = v.shape[0]
    cdef Py_ssize_t m = x_idx.shape[0]
    cdef Py_ssize_t j
    cdef double vx = 0.0
    cdef double vxn = 0.0
    cdef double delta, decay_v, c1, c2, c3, amu, sinc

    for j in range(m):
        vx += v[x_idx[j]]
    for j in range(xn_idx.shape[0]):
        vxn += v[xn_idx[j]]
    delta = r + gamma * vxn - vx

    decay_v = lambda_v * gamma
    for j in range(n):
        e_v[j] *= decay_v
    for j in range(m):
        e_v[x_idx[j]] += 1.0
    for j in range(n):
        if e_v[j] > 1.0:
            e_v[j] = 1.0
    c1 = alpha_v * delta
    for j in range(n):
        v[j] += c1 * e_v[j]

    amu = a - mu
    for j in range(n):
        e_mu[j] *= lambda_w
    for j in range(m):
        e_mu[x_idx[j]] += amu
    c2 = alpha_mu * delta
    for j in range(n):
        w_mu[j] += c2 * e_mu[j]

    sinc = amu * amu - sigma * sigma
    for j in range(n):
        e_sigma[j] *= lambda_w
    for j in range(m):
        e_sigma[x_idx[j]] += sinc
    c3 = alpha_sigma * delta
    for j in range(n):
        w_sigma[j] += c3 * e_sigma[j]

    return delta
