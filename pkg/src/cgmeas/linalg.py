"""Dense complex linear algebra for small matrices.

Covers the three operations the analysis needs: Hermitian eigenvalues,
partial transposition over the first tensor factor, and the negativity
entanglement monotone.  Matrices are plain complex ndarrays; sizes range
from 2x2 up to the Choi matrices of the coarse-graining channel (3*2^N).
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionError, PhysicalityError, SymmetryError

HERMITICITY_TOL = 1e-10
TRACE_TOL = 1e-10
PSD_TOL = 1e-10
EIGENVALUE_CLAMP = 1e-12


def _as_square(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {m.shape}")
    return m


def require_hermitian(m: np.ndarray, tol: float = HERMITICITY_TOL) -> np.ndarray:
    """Return ``m`` as a complex array, raising if it is not Hermitian within ``tol``."""
    m = _as_square(m)
    dev = np.abs(m - m.conj().T).max()
    if dev > tol:
        raise SymmetryError(f"matrix is not Hermitian: max deviation {dev:.3e} > {tol:.1e}")
    return m


def hermitian_eigenvalues(m: np.ndarray) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix, sorted in descending order."""
    m = require_hermitian(m)
    return np.sort(np.linalg.eigvalsh(m))[::-1]


def partial_transpose_system(m: np.ndarray, dim_a: int, dim_b: int) -> np.ndarray:
    """Transpose the first (dimension ``dim_a``) factor of a bipartite operator.

    The (a, a') block of size dim_b x dim_b is swapped with the (a', a)
    block; applying the map twice returns the input exactly.
    """
    m = _as_square(m)
    if m.shape[0] != dim_a * dim_b:
        raise DimensionError(
            f"matrix of size {m.shape[0]} does not factor as {dim_a}x{dim_b}"
        )
    return (
        m.reshape(dim_a, dim_b, dim_a, dim_b)
        .transpose(2, 1, 0, 3)
        .reshape(dim_a * dim_b, dim_a * dim_b)
    )


def require_density_matrix(m: np.ndarray) -> np.ndarray:
    """Validate Hermiticity, unit trace and positive semidefiniteness."""
    try:
        m = require_hermitian(m)
    except SymmetryError as err:
        raise PhysicalityError(f"not a density matrix: {err}") from err
    tr = m.trace()
    if abs(tr - 1.0) > TRACE_TOL:
        raise PhysicalityError(f"not a density matrix: trace {tr:.12g} differs from 1")
    lo = np.linalg.eigvalsh(m)[0]
    if lo < -PSD_TOL:
        raise PhysicalityError(f"not a density matrix: negative eigenvalue {lo:.3e}")
    return m


def negativity(m: np.ndarray, dim_a: int, dim_b: int) -> float:
    """Entanglement negativity: trace norm of the partial transpose minus 1.

    Equals twice the absolute sum of the negative eigenvalues of the
    partially transposed state.  Eigenvalues above -1e-12 are treated as
    roundoff and do not contribute, so separable states report exactly 0.
    """
    m = require_density_matrix(m)
    pt = partial_transpose_system(m, dim_a, dim_b)
    lam = np.linalg.eigvalsh(pt)
    neg = lam[lam < -EIGENVALUE_CLAMP]
    return float(2.0 * np.abs(neg).sum())
