"""Dense complex linear algebra for 4x4 (and 2x2) matrices.

Matrices are ``numpy`` complex128 arrays stored row-major over the product
basis ``|x_a x_b>, |x_a y_b>, |y_a x_b>, |y_a y_b>``. The Hermitian
eigensolver is a cyclic Jacobi iteration; a compiled kernel is used when it
was built and the pure-Python kernel otherwise. Set ``BELLSYM_BACKEND`` to
``python`` or ``ext`` to force a choice at import.
"""
import os

import numpy as np

from . import _jacobi
from .errors import NotHermitian, NotPSD

HERMITIAN_TOL = 1e-10
PSD_TOL = 1e-10
JACOBI_TOL = 1e-14

try:
    from . import _jacobi_ext
except ImportError:  # extension not built
    _jacobi_ext = None

_KERNELS = {"python": _jacobi.jacobi_eigh}
if _jacobi_ext is not None:
    _KERNELS["ext"] = _jacobi_ext.jacobi_eigh

BACKEND = "ext" if _jacobi_ext is not None else "python"
_requested = os.environ.get("BELLSYM_BACKEND")
if _requested:
    if _requested not in _KERNELS:
        raise ImportError(f"BELLSYM_BACKEND={_requested!r} is not available; have {sorted(_KERNELS)}")
    BACKEND = _requested


def available_backends():
    return sorted(_KERNELS)


def use_backend(name):
    """Switch the eigensolver kernel; returns the previous backend name."""
    global BACKEND
    if name not in _KERNELS:
        raise ValueError(f"unknown backend {name!r}; have {available_backends()}")
    previous, BACKEND = BACKEND, name
    return previous


def as_matrix(m):
    """Return ``m`` as a square complex128 array with finite entries."""
    arr = np.asarray(m, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("matrix has non-finite entries")
    return arr


def identity(n=4):
    return np.eye(n, dtype=np.complex128)


def projector(psi):
    """Rank-one projector |psi><psi|."""
    v = np.asarray(psi, dtype=np.complex128)
    return np.outer(v, v.conj())


def mat_mul(a, b):
    return as_matrix(a) @ as_matrix(b)


def adjoint(m):
    return as_matrix(m).conj().T


def trace(m):
    return complex(np.trace(as_matrix(m)))


def frobenius_norm(m):
    return float(np.sqrt(np.sum(np.abs(np.asarray(m)) ** 2)))


def hermiticity_residual(m):
    m = as_matrix(m)
    return frobenius_norm(m - m.conj().T)


def hermitian_eigh(m):
    """Eigenvalues (descending) and matching eigenvector columns of Hermitian ``m``.

    Raises NotHermitian when ``||m - m^H||_F`` exceeds ``HERMITIAN_TOL``.
    """
    w, v, _, asym = _KERNELS[BACKEND](as_matrix(m), JACOBI_TOL)
    if asym > HERMITIAN_TOL:
        raise NotHermitian(f"matrix is not self-adjoint (||m - m^H||_F = {asym:.3e})")
    # stable sort keeps the Jacobi order among ties
    order = np.argsort(-w, kind="stable")
    return w[order], v[:, order]


def hermitian_eigenvalues(m):
    return hermitian_eigh(m)[0]


def hermitian_sqrt(m):
    """Hermitian PSD square root.

    Eigenvalues in ``[-PSD_TOL, 0)`` are clamped to zero; anything more
    negative raises NotPSD.
    """
    w, v = hermitian_eigh(m)
    if w[-1] < -PSD_TOL:
        raise NotPSD(f"matrix has a negative eigenvalue {w[-1]:.3e}")
    root = np.sqrt(np.clip(w, 0.0, None))
    return (v * root) @ v.conj().T
