"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Matrix or subsystem dimensions do not match the expected shape."""


class SymmetryError(ValueError):
    """A matrix violates a required symmetry (e.g. Hermiticity) beyond tolerance."""


class PhysicalityError(ValueError):
    """A state fails a density-matrix requirement (trace, Hermiticity, positivity)."""


class ScaleError(ValueError):
    """The requested size exceeds the supported range of this evaluation path."""
