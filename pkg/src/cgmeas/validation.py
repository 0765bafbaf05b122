"""Self-check suite: every structural invariant of the build, in one report.

Each check measures a quantity and compares it to its tolerance; the CLI's
``validate`` subcommand prints one line per check and exits nonzero if any
fails.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import closed, exact
from .binning import BINS, bin_string_count, normalization_factor
from .linalg import hermitian_eigenvalues, negativity
from .params import ModelParams

ROOT2 = 1.0 / math.sqrt(2.0)
ROOT3 = 1.0 / math.sqrt(3.0)


@dataclass
class CheckResult:
    name: str
    passed: bool
    measured: float
    limit: float
    detail: str = ""

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        return (f"[{tag}] {self.name}: measured={self.measured:.6g} "
                f"limit={self.limit:.6g}{extra}")


@dataclass
class ValidationReport:
    checks: list[CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> list[str]:
        return [c.line() for c in self.checks]


def _check_oracle_equivalence() -> CheckResult:
    worst = 0.0
    thetas = np.linspace(0.0, 2.0 * np.pi, 9)
    for n in (3, 4, 6):
        for theta in thetas:
            for p in (0.3, 0.5):
                params = ModelParams.from_c0(ROOT3, N=n, p=p, theta=float(theta))
                d3 = np.abs(closed.effective_apparatus_state(params)
                            - exact.effective_apparatus_exact(params)).max()
                d6 = np.abs(closed.joint_effective_state(params)
                            - exact.joint_effective_exact(params)).max()
                worst = max(worst, float(d3), float(d6))
    return CheckResult("oracle-equivalence", worst <= 1e-9, worst, 1e-9,
                       "closed form vs full-space pipeline, N in {3,4,6}")


def _check_choi_positivity() -> CheckResult:
    mins = {}
    for n in (3, 6, 9):
        eigs = hermitian_eigenvalues(exact.choi_matrix(n))
        mins[n] = float(eigs.min())
    worst = min(mins.values())
    detail = ", ".join(f"N={n}: {v:.3e}" for n, v in mins.items())
    return CheckResult("choi-positivity", worst >= -1e-10, worst, -1e-10, detail)


def _check_channel_trace() -> CheckResult:
    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(5):
        g = rng.standard_normal((64, 64)) + 1j * rng.standard_normal((64, 64))
        op = g + g.conj().T
        diff = abs(exact.apply_channel_exact(op).trace() - op.trace())
        worst = max(worst, float(diff))
    return CheckResult("channel-trace-preservation", worst <= 1e-12, worst, 1e-12,
                       "random Hermitian inputs at N=6")


def _check_plateaus() -> CheckResult:
    worst = 0.0
    for n in (50, 500):
        for c0 in (ROOT2, ROOT3):
            params = ModelParams.from_c0(c0, N=n, theta=math.pi / 2)
            pr_plus, pr_zero, pr_minus = closed.magnetization_probabilities(params)
            worst = max(worst,
                        abs(pr_plus - abs(params.c0) ** 2),
                        abs(pr_minus - abs(params.c1) ** 2),
                        abs(pr_zero))
    return CheckResult("plateau-exactness", worst <= 1e-10, worst, 1e-10,
                       "Pr_+1 = |c0|^2, Pr_-1 = |c1|^2 at theta = pi/2")


def _check_probability_normalization() -> CheckResult:
    worst = 0.0
    for n in (1, 2, 3, 7, 33, 200):
        for theta in (0.0, 0.4, 2.2, 5.0):
            for p in (0.0, 0.25, 0.5, 0.9, 1.0):
                params = ModelParams.from_c0(ROOT3, N=n, p=p, theta=theta)
                worst = max(worst, abs(sum(closed.magnetization_probabilities(params)) - 1.0))
    return CheckResult("probability-normalization", worst <= 1e-12, worst, 1e-12)


def _check_binomial_concentration() -> CheckResult:
    values = []
    for n in (9, 33, 99):
        params = ModelParams.from_c0(ROOT2, N=n, p=0.5, theta=0.0)
        values.append(closed.magnetization_probabilities(params)[1])
    increasing = values[0] < values[1] < values[2]
    passed = increasing and values[-1] >= 0.99
    detail = ", ".join(f"{v:.6f}" for v in values)
    return CheckResult("binomial-concentration", passed, values[-1], 0.99,
                       f"Pr_0(theta=0) over N in (9, 33, 99): {detail}")


def _check_separability_zeros() -> CheckResult:
    worst = 0.0
    for theta in (0.0, math.pi, 2.0 * math.pi):
        for n in (4, 6, 12):
            for c0 in (ROOT2, ROOT3):
                params = ModelParams.from_c0(c0, N=n, theta=theta)
                worst = max(worst, negativity(closed.joint_effective_state(params), 2, 3))
    return CheckResult("separability-zeros", worst <= 1e-6, worst, 1e-6,
                       "negativity at theta in {0, pi, 2pi}")


def _check_physicality() -> CheckResult:
    worst_herm = worst_trace = 0.0
    worst_eig = np.inf
    for n in (4, 6, 12):
        for theta in np.linspace(0.0, 2.0 * np.pi, 17):
            params = ModelParams.from_c0(ROOT3, N=n, p=0.5, theta=float(theta))
            for state in (closed.effective_apparatus_state(params),
                          closed.joint_effective_state(params)):
                worst_herm = max(worst_herm, float(np.abs(state - state.conj().T).max()))
                worst_trace = max(worst_trace, abs(state.trace() - 1.0))
                worst_eig = min(worst_eig, float(np.linalg.eigvalsh(state)[0]))
    passed = worst_herm <= 1e-10 and worst_trace <= 1e-10 and worst_eig >= -1e-8
    detail = (f"hermiticity={worst_herm:.2e}, trace={worst_trace:.2e}, "
              f"min eig={worst_eig:.2e}")
    return CheckResult("physicality", passed, worst_eig, -1e-8, detail)


def _check_normalization_counts() -> CheckResult:
    worst = 0.0
    for n in range(1, 13):
        for a in BINS:
            for b in BINS:
                if a == b:
                    continue
                pairs = bin_string_count(a, n) * bin_string_count(b, n)
                if pairs == 0:
                    continue
                measured = normalization_factor((a, b), n) ** -2
                worst = max(worst, abs(measured - pairs) / pairs)
    return CheckResult("normalization-pair-counts", worst <= 1e-12, worst, 1e-12,
                       "factor^-2 vs integer pair enumeration, N <= 12")


def _check_coherence_decay() -> CheckResult:
    maxima = {}
    for n in (6, 48):
        top = 0.0
        for theta in np.linspace(0.0, 2.0 * np.pi, 65):
            params = ModelParams.from_c0(ROOT2, N=n, theta=float(theta))
            state = closed.effective_apparatus_state(params)
            top = max(top, float(np.abs(state[0, 1])), float(np.abs(state[0, 2])),
                      float(np.abs(state[1, 2])))
        maxima[n] = top
    passed = maxima[48] < maxima[6]
    return CheckResult("coherence-decay", passed, maxima[48], maxima[6],
                       f"max |coherence|: N=6 -> {maxima[6]:.4f}, N=48 -> {maxima[48]:.6f}")


def run_validation() -> ValidationReport:
    """Run every check and collect a structured pass/fail report."""
    checks = [
        _check_oracle_equivalence(),
        _check_choi_positivity(),
        _check_channel_trace(),
        _check_plateaus(),
        _check_probability_normalization(),
        _check_binomial_concentration(),
        _check_separability_zeros(),
        _check_physicality(),
        _check_normalization_counts(),
        _check_coherence_decay(),
    ]
    return ValidationReport(checks)
