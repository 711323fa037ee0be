"""Pure NumPy implementation of the per-step hot kernels.

This is the fallback backend used when the compiled extension is missing.
Both backends must produce bit-identical float64 results: every elementwise
operation here has the same order and rounding as the C loops in _fast.pyx
(the extension is compiled with -ffp-contract=off for that reason), and the
sparse dot products accumulate in index order in both.
"""

import numpy as np

BACKEND_NAME = "pure"


def encode(point, lows, inv_widths, offsets, tiles_per_dim, out):
    """Fill `out` with one active tile index per tiling for `point`.

    Each tiling k owns a contiguous block of (tiles_per_dim+1)**ndim cells;
    the per-dimension coordinate is floor(clamped_scaled + offset[k, d]) with
    clamped_scaled in [0, tiles_per_dim].
    """
    num_tilings = offsets.shape[0]
    ndim = lows.shape[0]
    edge = tiles_per_dim + 1
    block = edge**ndim
    for k in range(num_tilings):
        cell = 0
        for d in range(ndim):
            scaled = (point[d] - lows[d]) * inv_widths[d]
            if scaled < 0.0:
                scaled = 0.0
            elif scaled > tiles_per_dim:
                scaled = float(tiles_per_dim)
            c = int(np.floor(scaled + offsets[k, d]))
            cell = cell * edge + c
        out[k] = k * block + cell
    return out


def dot_at(w, idx):
    """Sum of w at the active indices, accumulated in index order."""
    total = 0.0
    for i in idx:
        total += w[i]
    return float(total)


def update_step(
    w_mu,
    w_sigma,
    v,
    e_mu,
    e_sigma,
    e_v,
    x_idx,
    xn_idx,
    a,
    mu,
    sigma,
    r,
    alpha_v,
    alpha_mu,
    alpha_sigma,
    gamma,
    lambda_w,
    lambda_v,
):
    """One actor-critic update over sparse binary features; returns the TD error.

    Mutates the six weight/trace vectors in place. Order of operations:
    TD error, critic trace (capped at 1), critic weights, mean trace, mean
    weights, stddev trace, stddev weights.
    """
    vx = dot_at(v, x_idx)
    vxn = dot_at(v, xn_idx)
    delta = r + gamma * vxn - vx

    decay_v = lambda_v * gamma
    e_v *= decay_v
    e_v[x_idx] += 1.0
    np.minimum(e_v, 1.0, out=e_v)
    v += (alpha_v * delta) * e_v

    amu = a - mu
    e_mu *= lambda_w
    e_mu[x_idx] += amu
    w_mu += (alpha_mu * delta) * e_mu

    e_sigma *= lambda_w
    e_sigma[x_idx] += amu * amu - sigma * sigma
    w_sigma += (alpha_sigma * delta) * e_sigma

    return delta
