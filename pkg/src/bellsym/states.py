"""Validated two-qubit density matrices."""
from dataclasses import dataclass, field

import numpy as np

from .errors import NotHermitian, NotPositive, TraceNotOne
from .linalg import HERMITIAN_TOL, PSD_TOL, as_matrix, hermitian_eigenvalues, hermiticity_residual

TRACE_TOL = 1e-10


@dataclass(frozen=True)
class DensityMatrix:
    """A 4x4 matrix that passed the self-adjoint, unit-trace and positivity checks.

    The residuals measured during validation are kept so reports can reuse them.
    """

    m: np.ndarray = field(repr=False)
    hermiticity_residual: float = 0.0
    trace_residual: float = 0.0
    eigenvalues: tuple = ()

    @property
    def min_eigenvalue(self):
        return self.eigenvalues[-1]

    def __array__(self, dtype=None, copy=None):
        return self.m if dtype is None else self.m.astype(dtype)


def validate_density(m):
    """Check that ``m`` is self-adjoint, has unit trace and is positive semidefinite.

    Raises NotHermitian, TraceNotOne or NotPositive, checked in that order.
    """
    if isinstance(m, DensityMatrix):
        return m
    arr = as_matrix(m)
    if arr.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {arr.shape}")
    herm = hermiticity_residual(arr)
    if herm > HERMITIAN_TOL:
        raise NotHermitian(f"density matrix must be self-adjoint: ||rho - rho^H||_F = {herm:.3e}")
    tr = abs(np.trace(arr) - 1.0)
    if tr > TRACE_TOL:
        raise TraceNotOne(f"density matrix must have unit trace: |Tr(rho) - 1| = {tr:.3e}")
    w = hermitian_eigenvalues(arr)
    if w[-1] < -PSD_TOL:
        raise NotPositive(f"density matrix must be positive: smallest eigenvalue {w[-1]:.3e}")
    arr = arr.copy()
    arr.flags.writeable = False
    return DensityMatrix(arr, herm, float(tr), tuple(float(x) for x in w))


def as_array(rho):
    """Underlying array of a DensityMatrix, or ``rho`` itself as an array."""
    if isinstance(rho, DensityMatrix):
        return rho.m
    return as_matrix(rho)
