import math
from math import factorial

import numpy as np
import pytest

from cgmeas.binning import (
    BINS,
    bin_of,
    bin_string_count,
    bin_zero_counts,
    log_multinomial,
    normalization_factor,
)


def exact_multinomial(n, parts):
    out = factorial(n)
    for p in parts:
        out //= factorial(p)
    return out


def brute_force_pair_count(a, b, n):
    """Count basis-string pairs by enumerating all 2^n indices per side."""
    bins = [bin_of(n - bin(i).count("1"), n) for i in range(1 << n)]
    return sum(1 for x in bins if x == a) * sum(1 for x in bins if x == b)


def four_count_pair_count(a, b, n):
    """Pair count via the multinomial sum over slot-type counts."""
    total = 0
    for k00 in range(n + 1):
        for k01 in range(n + 1 - k00):
            for k10 in range(n + 1 - k00 - k01):
                k11 = n - k00 - k01 - k10
                if bin_of(k00 + k01, n) == a and bin_of(k00 + k10, n) == b:
                    total += exact_multinomial(n, (k00, k01, k10, k11))
    return total


class TestBinOf:
    @pytest.mark.parametrize("l,n,expected", [
        (4, 6, 1), (3, 6, 0), (2, 6, -1),
        (0, 1, -1), (1, 1, 1),
        (2, 4, 0), (1, 4, -1), (3, 4, 1),
    ])
    def test_examples(self, l, n, expected):
        assert bin_of(l, n) == expected

    def test_exact_thirds_go_to_outer_bins(self):
        assert bin_of(3, 9) == -1   # l = N/3
        assert bin_of(6, 9) == 1    # l = 2N/3
        assert bin_of(4, 9) == 0
        assert bin_of(5, 9) == 0

    def test_middle_bin_empty_for_n_1_and_3(self):
        assert bin_zero_counts(0, 1).size == 0
        assert bin_zero_counts(0, 3).size == 0
        assert bin_zero_counts(0, 2).size == 1  # l = 1

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            bin_of(-1, 4)
        with pytest.raises(ValueError):
            bin_of(5, 4)


class TestLogMultinomial:
    def test_all_ones(self):
        assert abs(log_multinomial(4, (1, 1, 1, 1)) - math.log(24)) <= 1e-13

    def test_single_part(self):
        assert abs(log_multinomial(7, (7, 0, 0, 0))) <= 1e-13

    def test_binomial_case(self):
        assert abs(log_multinomial(6, (3, 3)) - math.log(20)) <= 1e-13

    def test_matches_exact_integers(self):
        rng = np.random.default_rng(5)
        for n in range(1, 21):
            for _ in range(5):
                cuts = np.sort(rng.integers(0, n + 1, size=3))
                parts = (int(cuts[0]), int(cuts[1] - cuts[0]),
                         int(cuts[2] - cuts[1]), int(n - cuts[2]))
                expected = exact_multinomial(n, parts)
                rel = abs(math.exp(log_multinomial(n, parts)) - expected) / expected
                assert rel <= 1e-12

    def test_bad_parts(self):
        with pytest.raises(ValueError):
            log_multinomial(4, (1, 1, 1))
        with pytest.raises(ValueError):
            log_multinomial(4, (5, -1))


class TestNormalizationFactor:
    def test_n4_value(self):
        # (C(4,0)+C(4,1)) * (C(4,3)+C(4,4)) = 25 string pairs
        assert abs(normalization_factor((-1, 1), 4) - 0.2) <= 1e-14

    def test_n3_value(self):
        # 4 strings per outer bin -> 16 pairs
        assert abs(normalization_factor((-1, 1), 3) - 0.25) <= 1e-14

    def test_symmetric_in_pair(self):
        for n in (4, 6, 10):
            for a in BINS:
                for b in BINS:
                    if a == b or bin_string_count(a, n) == 0 or bin_string_count(b, n) == 0:
                        continue
                    assert normalization_factor((a, b), n) == pytest.approx(
                        normalization_factor((b, a), n), abs=1e-15)

    def test_equal_bins_rejected(self):
        with pytest.raises(ValueError):
            normalization_factor((1, 1), 6)

    def test_empty_bin_rejected(self):
        with pytest.raises(ValueError):
            normalization_factor((0, 1), 1)

    def test_matches_brute_force_pair_counts(self):
        for n in range(1, 13):
            for a in BINS:
                for b in BINS:
                    if a == b:
                        continue
                    pairs = brute_force_pair_count(a, b, n)
                    if pairs == 0:
                        continue
                    measured = normalization_factor((a, b), n) ** -2
                    assert round(measured) == pairs
                    assert abs(measured - pairs) / pairs <= 1e-12

    def test_four_count_formulation_agrees(self):
        # multinomial sum over slot types == product of bin string counts
        for n in range(1, 13):
            for a, b in ((-1, 1), (-1, 0), (1, 0)):
                expected = bin_string_count(a, n) * bin_string_count(b, n)
                assert four_count_pair_count(a, b, n) == expected
