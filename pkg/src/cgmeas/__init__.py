"""cgmeas: a coarse-grained quantum measurement simulator.

A single qubit (amplitudes c0, c1) is read out by an apparatus of N
qubits.  A conditioned x-rotation entangles them, and a coarse-graining
channel compresses the 2^N-dimensional apparatus onto three effective
magnetization outcomes (+1, 0, -1).  The package evaluates the effective
states in closed form for large N, checks them against a brute-force
small-N pipeline, and sweeps probabilities, negativity and coherences.
"""

from .binning import bin_of, log_multinomial, normalization_factor
from .closed import (
    coarse_grained_power,
    effective_apparatus_state,
    joint_effective_state,
    magnetization_probabilities,
)
from .errors import DimensionError, PhysicalityError, ScaleError, SymmetryError
from .exact import (
    apply_channel_exact,
    choi_matrix,
    effective_apparatus_exact,
    joint_effective_exact,
)
from .linalg import hermitian_eigenvalues, negativity, partial_transpose_system
from .params import BranchMatrix, ModelParams, branch_entries, cross_branch_matrix
from .sweeps import (
    SweepResult,
    SweepSpec,
    sweep_coherences,
    sweep_initial_probabilities,
    sweep_negativity,
    sweep_time_probabilities,
)
from .validation import ValidationReport, run_validation

__version__ = "0.1.0"

__all__ = [
    "BranchMatrix",
    "DimensionError",
    "ModelParams",
    "PhysicalityError",
    "ScaleError",
    "SweepResult",
    "SweepSpec",
    "SymmetryError",
    "ValidationReport",
    "apply_channel_exact",
    "bin_of",
    "branch_entries",
    "choi_matrix",
    "coarse_grained_power",
    "cross_branch_matrix",
    "effective_apparatus_exact",
    "effective_apparatus_state",
    "hermitian_eigenvalues",
    "joint_effective_exact",
    "joint_effective_state",
    "log_multinomial",
    "magnetization_probabilities",
    "negativity",
    "normalization_factor",
    "partial_transpose_system",
    "run_validation",
    "sweep_coherences",
    "sweep_initial_probabilities",
    "sweep_negativity",
    "sweep_time_probabilities",
    "__version__",
]
