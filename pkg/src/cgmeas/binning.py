"""Magnetization bins over zero-counts and the channel's combinatorial factors.

The apparatus display resolves only three magnetization values.  A basis
string of N qubits with l qubits in |0> lands in bin +1 when 3l >= 2N, in
bin -1 when 3l <= N, and in bin 0 otherwise: closed outer intervals, open
middle interval.  The integer comparisons reproduce the thirds [0, N/3],
(N/3, 2N/3), [2N/3, N] for every N, divisible by 3 or not.

Bin-pair coherences are rescaled by a normalization factor equal to the
inverse square root of the number of basis-element pairs feeding that
effective element.  Counts are evaluated in log space (log-gamma), which
stays accurate far beyond the range where factorials overflow.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.special import gammaln

BINS = (1, 0, -1)
BIN_INDEX = {1: 0, 0: 1, -1: 2}


def bin_of(l: int, n: int) -> int:
    """Magnetization bin (+1, 0 or -1) of a string with ``l`` zeros out of ``n``."""
    if not 0 <= l <= n:
        raise ValueError(f"zero-count l={l} outside [0, {n}]")
    if 3 * l >= 2 * n:
        return 1
    if 3 * l <= n:
        return -1
    return 0


def bin_zero_counts(label: int, n: int) -> np.ndarray:
    """All zero-counts l in {0..n} that fall in the given bin."""
    ls = np.arange(n + 1)
    return ls[np.array([bin_of(int(l), n) for l in ls]) == label]


def log_binomial(n: int, k: int) -> float:
    """Natural log of C(n, k)."""
    if not 0 <= k <= n:
        raise ValueError(f"k={k} outside [0, {n}]")
    return float(gammaln(n + 1) - gammaln(k + 1) - gammaln(n - k + 1))


def log_multinomial(n: int, parts) -> float:
    """Natural log of the multinomial coefficient n! / prod(parts!).

    ``parts`` must be non-negative and sum to ``n``.
    """
    parts = list(parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    if sum(parts) != n:
        raise ValueError(f"parts {parts} do not sum to {n}")
    return float(gammaln(n + 1) - sum(gammaln(p + 1) for p in parts))


def bin_string_count(label: int, n: int) -> int:
    """Exact number of length-``n`` basis strings whose zero-count lies in the bin."""
    return sum(math.comb(n, int(l)) for l in bin_zero_counts(label, n))


def log_bin_string_count(label: int, n: int) -> float:
    """Log of the bin string count, via log-sum-exp over binomial terms."""
    ls = bin_zero_counts(label, n)
    if ls.size == 0:
        return -math.inf
    logs = gammaln(n + 1) - gammaln(ls + 1) - gammaln(n - ls + 1)
    m = logs.max()
    return float(m + np.log(np.exp(logs - m).sum()))


def normalization_factor(pair: tuple[int, int], n: int) -> float:
    """Coherence rescaling for a pair of distinct bins.

    Returns (number of basis-element pairs (i, j) with zero-count(i) in the
    first bin and zero-count(j) in the second) ** (-1/2).  The pair count
    factorizes as the product of the two bin string counts; the value is
    symmetric in the pair.
    """
    a, b = pair
    if a not in BINS or b not in BINS:
        raise ValueError(f"unknown bin labels {pair}")
    if a == b:
        raise ValueError(f"no normalization factor for equal bins {pair}: "
                         "same-bin coherences map to 0")
    log_a = log_bin_string_count(a, n)
    log_b = log_bin_string_count(b, n)
    if math.isinf(log_a) or math.isinf(log_b):
        raise ValueError(f"bin pair {pair} has zero basis-element pairs at N={n}")
    return math.exp(-0.5 * (log_a + log_b))
