"""Physical parameters and the single-constituent branch matrices.

The target qubit starts in c0|0> + c1|1>; each of the N apparatus qubits
starts in |Psi> = sqrt(p)|0> + sqrt(1-p) e^{i phi} |1>.  The interaction
rotates every apparatus qubit about x by +theta or -theta depending on the
target's sigma_z eigenvalue, with theta = omega * t / N.

The rotation convention is R(theta) = exp(-i theta sigma_x / 2).  With it,
the population of |0> after a +theta rotation is

    x(theta) = 1/2 + (p - 1/2) cos(theta) + sqrt(p(1-p)) sin(theta) sin(phi)

and the coherence is

    x_c(theta) = (1/2) { i (1-2p) sin(theta)
                         + 2 sqrt(p - p^2) (cos(phi) + i cos(theta) sin(phi)) }.

``branch_entries`` evaluates these closed forms; ``cross_branch_matrix``
builds R(s_k theta) |Psi><Psi| R(s_b theta)^dagger by explicit matrix
products.  The two must agree when the signs coincide, which pins the
half-angle convention.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace

import numpy as np

DEFAULT_P = 0.5
DEFAULT_PHI = math.pi / 2
DEFAULT_OMEGA = 1.0

NORM_TOL = 1e-12


@dataclass(frozen=True)
class ModelParams:
    """All physical inputs of the measurement model."""

    c0: complex
    c1: complex
    p: float
    phi: float
    N: int
    omega: float = DEFAULT_OMEGA
    theta: float = 0.0

    def __post_init__(self):
        norm = abs(self.c0) ** 2 + abs(self.c1) ** 2
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"|c0|^2 + |c1|^2 = {norm:.15g} is not 1")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p={self.p} outside [0, 1]")
        if self.N < 1:
            raise ValueError(f"N={self.N} must be a positive integer")

    @classmethod
    def from_c0(cls, c0: complex, N: int, p: float = DEFAULT_P,
                phi: float = DEFAULT_PHI, omega: float = DEFAULT_OMEGA,
                theta: float = 0.0) -> "ModelParams":
        """Build params with c1 = sqrt(1 - |c0|^2) (real, non-negative)."""
        c1 = math.sqrt(max(0.0, 1.0 - abs(c0) ** 2))
        return cls(c0=c0, c1=c1, p=p, phi=phi, N=N, omega=omega, theta=theta)

    def with_theta(self, theta: float) -> "ModelParams":
        return replace(self, theta=theta)

    def time(self) -> float:
        """Interaction time t = N * theta / omega."""
        return self.N * self.theta / self.omega


@dataclass(frozen=True)
class BranchMatrix:
    """2x2 single-constituent operator; one factor of an N-fold tensor power."""

    m00: complex
    m01: complex
    m10: complex
    m11: complex

    def as_array(self) -> np.ndarray:
        return np.array([[self.m00, self.m01], [self.m10, self.m11]], dtype=complex)

    def dagger(self) -> "BranchMatrix":
        return BranchMatrix(
            m00=self.m00.conjugate(), m01=self.m10.conjugate(),
            m10=self.m01.conjugate(), m11=self.m11.conjugate(),
        )


def _check_sign(sign: int) -> int:
    if sign not in (+1, -1):
        raise ValueError(f"branch sign must be +1 or -1, got {sign}")
    return sign


def branch_entries(params: ModelParams, branch_sign: int) -> BranchMatrix:
    """Rotated constituent state [[x, x_c*], [x_c, 1-x]] at branch_sign * theta."""
    _check_sign(branch_sign)
    th = branch_sign * params.theta
    p = params.p
    root = math.sqrt(p * (1.0 - p))
    x = 0.5 + (p - 0.5) * math.cos(th) + root * math.sin(th) * math.sin(params.phi)
    x_c = 0.5 * (
        1j * (1.0 - 2.0 * p) * math.sin(th)
        + 2.0 * root * (math.cos(params.phi) + 1j * math.cos(th) * math.sin(params.phi))
    )
    return BranchMatrix(m00=complex(x), m01=x_c.conjugate(), m10=x_c, m11=complex(1.0 - x))


def constituent_state(params: ModelParams) -> np.ndarray:
    """|Psi> = sqrt(p)|0> + sqrt(1-p) e^{i phi} |1> as a length-2 vector."""
    return np.array(
        [math.sqrt(params.p),
         math.sqrt(1.0 - params.p) * cmath.exp(1j * params.phi)],
        dtype=complex,
    )


def rotation_x(angle: float) -> np.ndarray:
    """R(angle) = exp(-i angle sigma_x / 2)."""
    c = math.cos(angle / 2.0)
    s = math.sin(angle / 2.0)
    return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)


def cross_branch_matrix(params: ModelParams, ket_sign: int, bra_sign: int) -> BranchMatrix:
    """R(ket_sign*theta) |Psi><Psi| R(bra_sign*theta)^dagger, entry by entry."""
    _check_sign(ket_sign)
    _check_sign(bra_sign)
    psi = constituent_state(params)
    ket = rotation_x(ket_sign * params.theta) @ psi
    bra = (rotation_x(bra_sign * params.theta) @ psi).conj()
    return BranchMatrix(
        m00=complex(ket[0] * bra[0]), m01=complex(ket[0] * bra[1]),
        m10=complex(ket[1] * bra[0]), m11=complex(ket[1] * bra[1]),
    )
