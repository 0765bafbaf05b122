"""Brute-force reference path: the channel acting on full 2^N-dim operators.

Everything here works directly on the exponentially large apparatus space,
with bins read off the zero-count (popcount) of every computational basis
index and coherence factors obtained by counting basis strings per bin.
No log-space combinatorics enter this module, which makes it the oracle
the closed-form evaluation is tested against.

Paths:
  * ``apply_channel_exact``   - arbitrary 2^N x 2^N operators, O(4^N) sweep.
  * ``apply_channel_to_outer``- rank-1 operators v w^dagger via per-bin
    amplitude sums, O(2^N); used by the state pipeline so the oracle stays
    fast enough at N = 12.
  * ``choi_matrix``           - the channel's Choi state for the numerical
    complete-positivity check.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .binning import BIN_INDEX, BINS, bin_of
from .errors import DimensionError, ScaleError
from .params import ModelParams, constituent_state, rotation_x

MAX_EXACT_N = 12
MAX_CHOI_N = 9


@lru_cache(maxsize=None)
def zero_counts(n: int) -> np.ndarray:
    """Zero-count of every computational basis index of n qubits."""
    idx = np.arange(1 << n, dtype=np.int64)
    ones = np.zeros(1 << n, dtype=np.int64)
    for k in range(n):
        ones += (idx >> k) & 1
    return n - ones


@lru_cache(maxsize=None)
def bin_masks(n: int) -> dict[int, np.ndarray]:
    """Boolean mask over basis indices for each magnetization bin."""
    ls = zero_counts(n)
    labels = np.array([bin_of(int(l), n) for l in ls])
    return {b: labels == b for b in BINS}


def _infer_n(dim: int) -> int:
    n = dim.bit_length() - 1
    if dim != (1 << n):
        raise DimensionError(f"operator dimension {dim} is not a power of 2")
    return n


def apply_channel_exact(op: np.ndarray) -> np.ndarray:
    """Coarse-grain a full apparatus operator to its 3x3 effective form.

    Diagonal entries collect the operator's diagonal per bin; off-diagonal
    effective entries collect every basis pair whose zero-counts fall in
    two different bins, scaled by 1/sqrt(pairs).  All other basis pairs
    (off-diagonal within one bin) are erased.
    """
    op = np.asarray(op, dtype=complex)
    if op.ndim != 2 or op.shape[0] != op.shape[1]:
        raise DimensionError(f"expected a square operator, got shape {op.shape}")
    n = _infer_n(op.shape[0])
    if n > MAX_EXACT_N:
        raise ScaleError(
            f"N={n} exceeds the exact path limit {MAX_EXACT_N}; "
            "use the closed-form evaluation instead"
        )
    masks = bin_masks(n)
    eff = np.zeros((3, 3), dtype=complex)
    diag = np.diagonal(op)
    for a in BINS:
        eff[BIN_INDEX[a], BIN_INDEX[a]] = diag[masks[a]].sum()
    for a in BINS:
        for b in BINS:
            if a == b:
                continue
            ca = int(masks[a].sum())
            cb = int(masks[b].sum())
            if ca == 0 or cb == 0:
                continue
            block = op[np.ix_(masks[a], masks[b])].sum()
            eff[BIN_INDEX[a], BIN_INDEX[b]] = block / np.sqrt(ca * cb)
    return eff


def apply_channel_to_outer(v: np.ndarray, w: np.ndarray) -> np.ndarray:
    """Channel action on v w^dagger without materializing the outer product.

    The per-bin sums factorize for rank-1 operators:
    sum_{i in A, j in B} v_i conj(w_j) = (sum_A v) * conj(sum_B w).
    """
    v = np.asarray(v, dtype=complex).ravel()
    w = np.asarray(w, dtype=complex).ravel()
    if v.shape != w.shape:
        raise DimensionError(f"vector shapes {v.shape} and {w.shape} differ")
    n = _infer_n(v.size)
    masks = bin_masks(n)
    eff = np.zeros((3, 3), dtype=complex)
    for a in BINS:
        eff[BIN_INDEX[a], BIN_INDEX[a]] = (v[masks[a]] * w[masks[a]].conj()).sum()
    sums_v = {b: v[masks[b]].sum() for b in BINS}
    sums_w = {b: w[masks[b]].sum() for b in BINS}
    for a in BINS:
        for b in BINS:
            if a == b:
                continue
            ca = int(masks[a].sum())
            cb = int(masks[b].sum())
            if ca == 0 or cb == 0:
                continue
            eff[BIN_INDEX[a], BIN_INDEX[b]] = sums_v[a] * sums_w[b].conj() / np.sqrt(ca * cb)
    return eff


def choi_matrix(n: int) -> np.ndarray:
    """Choi state (1 x Lambda)(|Phi+><Phi+|) of the coarse-graining channel.

    Returned as a (3*2^n) x (3*2^n) Hermitian unit-trace matrix; its minimum
    eigenvalue certifies complete positivity numerically.
    """
    if not 1 <= n <= MAX_CHOI_N:
        raise ScaleError(f"Choi matrix supported for 1 <= N <= {MAX_CHOI_N}, got {n}")
    dim = 1 << n
    masks = bin_masks(n)
    rho = np.zeros((3 * dim, 3 * dim), dtype=complex)
    idx = np.arange(dim)
    for a in BINS:
        rows = idx[masks[a]] * 3 + BIN_INDEX[a]
        rho[rows, rows] = 1.0
        for b in BINS:
            if a == b:
                continue
            ca = int(masks[a].sum())
            cb = int(masks[b].sum())
            if ca == 0 or cb == 0:
                continue
            cols = idx[masks[b]] * 3 + BIN_INDEX[b]
            rho[np.ix_(rows, cols)] = 1.0 / np.sqrt(ca * cb)
    return rho / dim


def branch_vector(params: ModelParams, sign: int) -> np.ndarray:
    """(R(sign*theta)|Psi>)^{tensor N} as a 2^N amplitude vector."""
    if params.N > MAX_EXACT_N:
        raise ScaleError(
            f"N={params.N} exceeds the exact path limit {MAX_EXACT_N}; "
            "use the closed-form evaluation instead"
        )
    u = rotation_x(sign * params.theta) @ constituent_state(params)
    v = u
    for _ in range(params.N - 1):
        v = np.kron(v, u)
    return v


def effective_apparatus_exact(params: ModelParams) -> np.ndarray:
    """3x3 effective apparatus state from the full-space pipeline."""
    v_plus = branch_vector(params, +1)
    v_minus = branch_vector(params, -1)
    rho = (abs(params.c0) ** 2 * apply_channel_to_outer(v_plus, v_plus)
           + abs(params.c1) ** 2 * apply_channel_to_outer(v_minus, v_minus))
    return rho


def joint_effective_exact(params: ModelParams) -> np.ndarray:
    """6x6 system (x) effective-apparatus state from the full-space pipeline.

    Block (a, b) of the joint pure state is c_a conj(c_b) v_a v_b^dagger
    with v_a the +theta / -theta rotated apparatus vector; the channel is
    applied block by block.
    """
    v = {0: branch_vector(params, +1), 1: branch_vector(params, -1)}
    c = {0: params.c0, 1: params.c1}
    joint = np.zeros((6, 6), dtype=complex)
    for a in (0, 1):
        for b in (0, 1):
            coeff = c[a] * np.conj(c[b])
            joint[a * 3:(a + 1) * 3, b * 3:(b + 1) * 3] = (
                coeff * apply_channel_to_outer(v[a], v[b])
            )
    return joint
