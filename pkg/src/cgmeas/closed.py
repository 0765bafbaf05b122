"""Closed-form coarse graining of N-fold tensor powers of a 2x2 matrix.

For a single-constituent operator m, the channel output of m^{tensor N}
depends only on how many tensor slots carry each of the four entries.
Grouping basis pairs by the slot-type counts (k00, k01, k10, k11) gives

  diagonal bin B:       sum_{l in B} C(N, l) m00^l m11^(N-l)
  off-diagonal (A, B):  n_AB(N) * sum multinomial(N; k00, k01, k10, k11)
                                   * m00^k00 m01^k01 m10^k10 m11^k11

with the off-diagonal sum running over counts whose ket zero-count
(k00 + k01) lies in bin A and bra zero-count (k00 + k10) lies in bin B.

Multinomials reach ~1e148 by N = 500 while the entry powers underflow, so
every term is carried as (log magnitude, phase), rescaled by the running
maximum log magnitude and only exponentiated once at the end; totals whose
magnitude falls below 1e-300 round to exact 0.
"""

from __future__ import annotations

import cmath
import math
from functools import lru_cache

import numpy as np
from scipy.special import gammaln

from .binning import BIN_INDEX, BINS, bin_zero_counts, normalization_factor
from .errors import ScaleError
from .params import BranchMatrix, ModelParams, branch_entries, cross_branch_matrix

COHERENCE_N_LIMIT = 99
LOG_UNDERFLOW = math.log(1e-300)
_LOG_ZERO = -1e30  # stand-in for log(0); keeps matmuls finite
_ENTRY_BOUND_TOL = 1e-9


@lru_cache(maxsize=None)
def _diag_enumeration(n: int, label: int) -> tuple[np.ndarray, np.ndarray]:
    """Zero-counts in a bin and the log binomial weight of each."""
    ls = bin_zero_counts(label, n).astype(np.int64)
    log_c = gammaln(n + 1) - gammaln(ls + 1) - gammaln(n - ls + 1)
    return ls, log_c


@lru_cache(maxsize=None)
def _offdiag_enumeration(n: int, a: int, b: int) -> tuple[np.ndarray, np.ndarray]:
    """Slot-type counts (k00, k01, k10, k11) and log multinomials for a bin pair."""
    rows = []
    for lk in bin_zero_counts(a, n):
        for lb in bin_zero_counts(b, n):
            lo = max(0, int(lk) + int(lb) - n)
            hi = min(int(lk), int(lb))
            for k00 in range(lo, hi + 1):
                rows.append((k00, int(lk) - k00, int(lb) - k00,
                             n - int(lk) - int(lb) + k00))
    if not rows:
        return np.zeros((0, 4), dtype=np.int64), np.zeros(0)
    counts = np.array(rows, dtype=np.int64)
    log_mult = gammaln(n + 1) - gammaln(counts + 1).sum(axis=1)
    return counts, log_mult


def _safe_log_abs(values: np.ndarray) -> np.ndarray:
    mags = np.abs(values)
    with np.errstate(divide="ignore"):
        logs = np.log(mags)
    return np.where(np.isfinite(logs), logs, _LOG_ZERO)


def _rescaled_sum(log_mag: np.ndarray, phase: np.ndarray, extra_log: float) -> complex:
    """exp(extra_log) * sum(exp(log_mag) * e^{i phase}), stably."""
    if log_mag.size == 0:
        return 0j
    peak = float(log_mag.max())
    total = complex((np.exp(log_mag - peak) * np.exp(1j * phase)).sum())
    mag = abs(total)
    if mag == 0.0:
        return 0j
    total_log = peak + extra_log + math.log(mag)
    if total_log < LOG_UNDERFLOW:
        return 0j
    return (total / mag) * math.exp(total_log)


def _entries_array(m) -> np.ndarray:
    if isinstance(m, BranchMatrix):
        arr = m.as_array()
    else:
        arr = np.asarray(m, dtype=complex)
        if arr.shape != (2, 2):
            raise ValueError(f"expected a 2x2 matrix, got shape {arr.shape}")
    top = np.abs(arr).max()
    if top > 1.0 + _ENTRY_BOUND_TOL:
        raise ValueError(f"matrix entries must have modulus <= 1, got {top:.6g}")
    return arr


def coarse_grained_power(m, n: int) -> np.ndarray:
    """Channel output of m^{tensor N} as a 3x3 matrix, basis (+1, 0, -1)."""
    if n < 1:
        raise ValueError(f"N={n} must be a positive integer")
    arr = _entries_array(m)
    flat = arr.ravel()  # [m00, m01, m10, m11]
    logs = _safe_log_abs(flat)
    phases = np.angle(flat)
    eff = np.zeros((3, 3), dtype=complex)
    for b in BINS:
        ls, log_c = _diag_enumeration(n, b)
        log_mag = log_c + ls * logs[0] + (n - ls) * logs[3]
        phase = ls * phases[0] + (n - ls) * phases[3]
        eff[BIN_INDEX[b], BIN_INDEX[b]] = _rescaled_sum(log_mag, phase, 0.0)
    for a in BINS:
        for b in BINS:
            if a == b:
                continue
            counts, log_mult = _offdiag_enumeration(n, a, b)
            if counts.shape[0] == 0:
                continue
            log_mag = log_mult + counts @ logs
            phase = counts @ phases
            log_norm = math.log(normalization_factor((a, b), n))
            eff[BIN_INDEX[a], BIN_INDEX[b]] = _rescaled_sum(log_mag, phase, log_norm)
    return eff


def _require_coherence_scale(n: int) -> None:
    if n > COHERENCE_N_LIMIT:
        raise ScaleError(
            f"coherence-bearing evaluation limited to N <= {COHERENCE_N_LIMIT} "
            f"(got N={n}); use magnetization_probabilities for the diagonal"
        )


def effective_apparatus_state(params: ModelParams) -> np.ndarray:
    """3x3 effective apparatus state: the two branch tensor powers, mixed."""
    _require_coherence_scale(params.N)
    plus = coarse_grained_power(branch_entries(params, +1), params.N)
    minus = coarse_grained_power(branch_entries(params, -1), params.N)
    return abs(params.c0) ** 2 * plus + abs(params.c1) ** 2 * minus


def joint_effective_state(params: ModelParams) -> np.ndarray:
    """6x6 system (x) effective apparatus state, basis (0, 1) x (+1, 0, -1).

    System block (a, b) is c_a conj(c_b) times the coarse-grained tensor
    power of the cross-branch constituent matrix for the sign pair; the
    (1, 0) block is the adjoint of the (0, 1) block.
    """
    _require_coherence_scale(params.N)
    n = params.N
    g_plus = coarse_grained_power(cross_branch_matrix(params, +1, +1), n)
    g_minus = coarse_grained_power(cross_branch_matrix(params, -1, -1), n)
    g_cross = coarse_grained_power(cross_branch_matrix(params, +1, -1), n)
    c0, c1 = params.c0, params.c1
    joint = np.zeros((6, 6), dtype=complex)
    joint[0:3, 0:3] = abs(c0) ** 2 * g_plus
    joint[3:6, 3:6] = abs(c1) ** 2 * g_minus
    joint[0:3, 3:6] = c0 * np.conj(c1) * g_cross
    joint[3:6, 0:3] = joint[0:3, 3:6].conj().T
    return joint


def _branch_bin_masses(x: float, n: int) -> dict[int, float]:
    """Binomial mass of each bin for a constituent with |0>-population x."""
    x = min(1.0, max(0.0, x))
    log_x = math.log(x) if x > 0.0 else _LOG_ZERO
    log_1mx = math.log(1.0 - x) if x < 1.0 else _LOG_ZERO
    masses = {}
    for b in BINS:
        ls, log_c = _diag_enumeration(n, b)
        if ls.size == 0:
            masses[b] = 0.0
            continue
        log_terms = log_c + ls * log_x + (n - ls) * log_1mx
        peak = float(log_terms.max())
        if peak < LOG_UNDERFLOW:
            masses[b] = 0.0
            continue
        masses[b] = float(np.exp(log_terms - peak).sum() * math.exp(peak))
    return masses


def magnetization_probabilities(params: ModelParams) -> tuple[float, float, float]:
    """(Pr_{+1}, Pr_0, Pr_{-1}): the effective state's diagonal, O(N) per call."""
    x = branch_entries(params, +1).m00.real
    y = branch_entries(params, -1).m00.real
    w0 = abs(params.c0) ** 2
    w1 = abs(params.c1) ** 2
    mass_x = _branch_bin_masses(x, params.N)
    mass_y = _branch_bin_masses(y, params.N)
    return tuple(w0 * mass_x[b] + w1 * mass_y[b] for b in BINS)
