"""Acceptance suite: one test per shipped guarantee, at its stated tolerance.

Each criterion prints a [PASS]/[FAIL] line (visible with ``pytest -s``)
before asserting.  The separability criterion at theta = pi/2 cannot hold
for small N: the channel keeps a cross-bin coherence of magnitude n1(N)
there, making the negativity exactly 2|c0 c1| n1(N) (0.2 at N=4).  Those
cases are asserted as specified and fail; see the README's known-results
note.  Zeros at theta in {0, pi} hold to machine precision.
"""

import math
import time
from fractions import Fraction
from math import comb

import numpy as np
import pytest

from cgmeas.closed import (
    effective_apparatus_state,
    joint_effective_state,
    magnetization_probabilities,
)
from cgmeas.exact import (
    choi_matrix,
    effective_apparatus_exact,
    joint_effective_exact,
)
from cgmeas.linalg import hermitian_eigenvalues, negativity
from cgmeas.params import ModelParams
from cgmeas.sweeps import SweepSpec, sweep_coherences, sweep_negativity

ROOT2 = 1.0 / math.sqrt(2.0)
ROOT3 = 1.0 / math.sqrt(3.0)


def report(name, passed, detail=""):
    tag = "PASS" if passed else "FAIL"
    print(f"[{tag}] {name}" + (f": {detail}" if detail else ""))
    assert passed, f"{name}: {detail}"


class TestOracleEquivalence:
    def test_closed_form_matches_exact_pipeline(self):
        start = time.perf_counter()
        worst = 0.0
        thetas = [k * math.pi / 16 for k in range(33)]
        for n in (3, 4, 6, 9, 12):
            for theta in thetas:
                for p in (0.3, 0.5):
                    for c0 in (ROOT2, ROOT3):
                        params = ModelParams.from_c0(c0, N=n, p=p, theta=theta)
                        d3 = np.abs(effective_apparatus_state(params)
                                    - effective_apparatus_exact(params)).max()
                        d6 = np.abs(joint_effective_state(params)
                                    - joint_effective_exact(params)).max()
                        worst = max(worst, float(d3), float(d6))
        elapsed = time.perf_counter() - start
        report("oracle equivalence (N in {3,4,6,9,12}, 33 thetas, 2 p, 2 c0)",
               worst <= 1e-9 and elapsed < 120.0,
               f"max entrywise diff {worst:.3e} (limit 1e-9), {elapsed:.1f}s (limit 120s)")


class TestCompletePositivity:
    def test_choi_spectrum_nonnegative(self):
        start = time.perf_counter()
        mins = {}
        for n in (3, 6, 9):
            mins[n] = float(hermitian_eigenvalues(choi_matrix(n)).min())
        elapsed = time.perf_counter() - start
        worst = min(mins.values())
        detail = ", ".join(f"N={n}: {v:.2e}" for n, v in mins.items())
        report("complete positivity (Choi min eigenvalue >= -1e-10)",
               worst >= -1e-10 and elapsed < 300.0,
               f"{detail}; {elapsed:.1f}s (limit 300s)")


class TestPlateauExactness:
    @pytest.mark.parametrize("n", [50, 500])
    def test_plateau_probabilities(self, n):
        worst = 0.0
        for c0 in (ROOT2, ROOT3):
            params = ModelParams.from_c0(c0, N=n, p=0.5, phi=math.pi / 2,
                                         theta=math.pi / 2)
            pr_plus, pr_zero, pr_minus = magnetization_probabilities(params)
            worst = max(worst,
                        abs(pr_plus - abs(params.c0) ** 2),
                        abs(pr_minus - abs(params.c1) ** 2),
                        abs(pr_zero))
        report(f"plateau exactness at N={n}", worst <= 1e-10,
               f"max deviation {worst:.3e} (limit 1e-10)")


class TestInitialConcentration:
    def test_zero_outcome_probability_grows_with_n(self):
        # independent oracle: exact integer binomial masses of the middle bin
        expected = {}
        for n in (9, 33, 99):
            mid = [l for l in range(n + 1) if 3 * l > n and 3 * l < 2 * n]
            expected[n] = float(Fraction(sum(comb(n, l) for l in mid), 2 ** n))
        measured = {}
        for n in (9, 33, 99):
            params = ModelParams.from_c0(ROOT2, N=n, p=0.5, theta=0.0)
            measured[n] = magnetization_probabilities(params)[1]
        agree = max(abs(measured[n] - expected[n]) for n in expected)
        increasing = measured[9] < measured[33] < measured[99]
        passed = agree <= 1e-12 and increasing and measured[99] >= 0.99
        report("initial zero-outcome concentration (N in {9,33,99})", passed,
               f"Pr_0 = {measured[9]:.6f}, {measured[33]:.6f}, {measured[99]:.6f}; "
               f"oracle agreement {agree:.2e}")


class TestSeparabilityPoints:
    @pytest.mark.parametrize("theta,theta_id", [
        (0.0, "theta=0"), (math.pi / 2, "theta=pi/2"), (math.pi, "theta=pi")],
        ids=["theta0", "pi_half", "pi"])
    @pytest.mark.parametrize("c0", [ROOT2, ROOT3], ids=["c0=1/sqrt2", "c0=1/sqrt3"])
    @pytest.mark.parametrize("n", [4, 6, 12])
    def test_negativity_vanishes(self, theta, theta_id, c0, n):
        params = ModelParams.from_c0(c0, N=n, p=0.5, phi=math.pi / 2, theta=theta)
        value = negativity(joint_effective_state(params), 2, 3)
        report(f"separability at {theta_id}, N={n}, c0={c0:.4f}",
               value <= 1e-6, f"negativity {value:.3e} (limit 1e-6)")


class TestQuantumnessDecay:
    def test_maxima_strictly_decrease_along_n(self):
        grid = tuple(np.linspace(0.0, 2 * math.pi, 128))
        base = ModelParams.from_c0(ROOT2, N=1, p=0.5, phi=math.pi / 2)
        ladder = (6, 12, 24, 48)
        spec = SweepSpec("theta", grid, base, ladder)
        neg = sweep_negativity(spec)
        coh = sweep_coherences(spec)
        neg_max = [neg.values(n, "negativity").max() for n in ladder]
        coh_max = {name: [coh.values(n, name).max() for n in ladder]
                   for name in ("abs_10", "abs_1m1", "abs_0m1")}
        decreasing = all(a > b for a, b in zip(neg_max, neg_max[1:]))
        for series in coh_max.values():
            decreasing = decreasing and all(a > b for a, b in zip(series, series[1:]))
        detail = ("negativity maxima " + ", ".join(f"{v:.4f}" for v in neg_max)
                  + "; |rho_{+1,0}| maxima "
                  + ", ".join(f"{v:.4f}" for v in coh_max["abs_10"]))
        report("decay of quantumness along N in {6,12,24,48}", decreasing, detail)


class TestPhysicalitySuite:
    def test_every_state_is_a_density_matrix(self):
        worst_herm = worst_trace = 0.0
        worst_eig = math.inf
        for n in (4, 6, 12, 24, 48):
            for theta in np.linspace(0.0, 2 * math.pi, 33):
                params = ModelParams.from_c0(ROOT3, N=n, p=0.5, theta=float(theta))
                for state in (effective_apparatus_state(params),
                              joint_effective_state(params)):
                    worst_herm = max(worst_herm,
                                     float(np.abs(state - state.conj().T).max()))
                    worst_trace = max(worst_trace, abs(state.trace() - 1.0))
                    worst_eig = min(worst_eig, float(np.linalg.eigvalsh(state)[0]))
        passed = worst_herm <= 1e-10 and worst_trace <= 1e-10 and worst_eig >= -1e-8
        report("physicality suite (Hermitian, unit trace, PSD)", passed,
               f"hermiticity {worst_herm:.2e}, trace {worst_trace:.2e}, "
               f"min eigenvalue {worst_eig:.2e}")


class TestPerformanceEnvelope:
    def test_probability_sweep_n500(self):
        start = time.perf_counter()
        for theta in np.linspace(0.0, 4 * math.pi, 256):
            params = ModelParams.from_c0(ROOT2, N=500, theta=float(theta))
            magnetization_probabilities(params)
        elapsed = time.perf_counter() - start
        report("performance: probability sweep N=500 x 256 points",
               elapsed < 10.0, f"{elapsed:.2f}s (limit 10s)")

    def test_coherence_negativity_sweep_n48(self):
        grid = tuple(np.linspace(0.0, 2 * math.pi, 256))
        base = ModelParams.from_c0(ROOT2, N=1, p=0.5, phi=math.pi / 2)
        spec = SweepSpec("theta", grid, base, (48,))
        start = time.perf_counter()
        sweep_negativity(spec)
        sweep_coherences(spec)
        elapsed = time.perf_counter() - start
        report("performance: coherence+negativity sweep N=48 x 256 points",
               elapsed < 600.0, f"{elapsed:.1f}s (limit 600s)")
