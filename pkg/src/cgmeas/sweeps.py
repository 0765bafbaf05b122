"""Figure-level sweeps: probabilities, negativity and coherences over grids.

Each sweep walks a grid (over p, theta or time) for a list of apparatus
sizes N and emits long-format rows (sweep value, N, observable, value).
States computed along the way are validated as density matrices before
observables are read off.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .closed import (
    effective_apparatus_state,
    joint_effective_state,
    magnetization_probabilities,
)
from .linalg import negativity, require_density_matrix
from .params import ModelParams

PROB_NAMES = ("pr_plus1", "pr_0", "pr_minus1")
COHERENCE_NAMES = ("abs_10", "abs_1m1", "abs_0m1")


@dataclass(frozen=True)
class SweepSpec:
    """Grid description: what varies, over which values, for which N."""

    variable: str  # 'p', 'theta' or 'time'
    grid: tuple[float, ...]
    base: ModelParams
    n_list: tuple[int, ...]

    def __post_init__(self):
        if self.variable not in ("p", "theta", "time"):
            raise ValueError(f"unknown sweep variable {self.variable!r}")
        if not self.n_list:
            raise ValueError("n_list must not be empty")
        g = np.asarray(self.grid, dtype=float)
        if g.size == 0 or (g.size > 1 and not np.all(np.diff(g) > 0)):
            raise ValueError("grid must be non-empty and strictly increasing")


@dataclass
class SweepResult:
    """Long-format result: one row per (sweep value, N, observable)."""

    rows: list[tuple[float, int, str, float]] = field(default_factory=list)

    def add(self, value: float, n: int, name: str, obs: float) -> None:
        self.rows.append((float(value), int(n), name, float(obs)))

    def series(self, n: int, name: str) -> list[tuple[float, float]]:
        return [(v, o) for v, m, nm, o in self.rows if m == n and nm == name]

    def values(self, n: int, name: str) -> np.ndarray:
        return np.array([o for _, o in self.series(n, name)])


def _params_at(spec: SweepSpec, n: int, value: float) -> ModelParams:
    base = spec.base
    if spec.variable == "p":
        return ModelParams(c0=base.c0, c1=base.c1, p=float(value), phi=base.phi,
                           N=n, omega=base.omega, theta=0.0)
    theta = float(value) if spec.variable == "theta" else base.omega * float(value) / n
    return ModelParams(c0=base.c0, c1=base.c1, p=base.p, phi=base.phi,
                       N=n, omega=base.omega, theta=theta)


def _prob_rows(result: SweepResult, value: float, n: int, params: ModelParams) -> None:
    probs = magnetization_probabilities(params)
    total = sum(probs)
    if abs(total - 1.0) > 1e-12:
        raise AssertionError(f"probabilities sum to {total:.15g} at N={n}")
    for name, pr in zip(PROB_NAMES, probs):
        result.add(value, n, name, pr)


def sweep_initial_probabilities(spec: SweepSpec) -> SweepResult:
    """Outcome probabilities vs the constituent coefficient p, at theta = 0."""
    if spec.variable != "p":
        raise ValueError("initial-probability sweep must vary p")
    result = SweepResult()
    for n in spec.n_list:
        for value in spec.grid:
            _prob_rows(result, value, n, _params_at(spec, n, value))
    return result


def sweep_time_probabilities(spec: SweepSpec) -> SweepResult:
    """Outcome probabilities vs theta (or time, converted per N)."""
    if spec.variable not in ("theta", "time"):
        raise ValueError("time-probability sweep must vary theta or time")
    result = SweepResult()
    for n in spec.n_list:
        for value in spec.grid:
            _prob_rows(result, value, n, _params_at(spec, n, value))
    return result


def sweep_negativity(spec: SweepSpec) -> SweepResult:
    """System-apparatus negativity of the joint effective state vs theta."""
    if spec.variable != "theta":
        raise ValueError("negativity sweep must vary theta")
    result = SweepResult()
    for n in spec.n_list:
        for value in spec.grid:
            joint = joint_effective_state(_params_at(spec, n, value))
            result.add(value, n, "negativity", negativity(joint, 2, 3))
    return result


def sweep_coherences(spec: SweepSpec) -> SweepResult:
    """Moduli of the three effective-state coherences vs theta."""
    if spec.variable != "theta":
        raise ValueError("coherence sweep must vary theta")
    result = SweepResult()
    for n in spec.n_list:
        for value in spec.grid:
            state = require_density_matrix(
                effective_apparatus_state(_params_at(spec, n, value))
            )
            for name, (i, j) in zip(COHERENCE_NAMES, ((0, 1), (0, 2), (1, 2))):
                result.add(value, n, name, abs(state[i, j]))
    return result
