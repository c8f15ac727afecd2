"""Rotation, twist and polarizer operators on the two-qubit polarization space.

All matrices are written out entry by entry in the product basis
``|x_a x_b>, |x_a y_b>, |y_a x_b>, |y_a y_b>``.
"""
from math import cos, sin, sqrt

import numpy as np

from .linalg import as_matrix

# basis index permutations
_PARTY_SWAP = [0, 2, 1, 3]  # |x_a y_b> <-> |y_a x_b>
_AXIS_SWAP = [3, 2, 1, 0]  # x <-> y on both parties


def rotation(theta, phi):
    """Rotate by ``theta`` in subspace A and ``phi`` in subspace B (real orthogonal)."""
    ct, st, cp, sp = cos(theta), sin(theta), cos(phi), sin(phi)
    return np.array(
        [
            [ct * cp, ct * sp, st * cp, st * sp],
            [-ct * sp, ct * cp, -st * sp, st * cp],
            [-st * cp, -st * sp, ct * cp, ct * sp],
            [st * sp, -st * cp, -ct * sp, ct * cp],
        ],
        dtype=np.complex128,
    )


def rotation_both(theta):
    return rotation(theta, theta)


def twist(theta):
    return rotation(theta, -theta)


def polarizer_a(alpha):
    """Projector for a linear polarizer at ``alpha`` on side A."""
    c, s = cos(alpha), sin(alpha)
    cc, cs, ss = c * c, c * s, s * s
    return np.array(
        [
            [cc, 0, cs, 0],
            [0, cc, 0, cs],
            [cs, 0, ss, 0],
            [0, cs, 0, ss],
        ],
        dtype=np.complex128,
    )


def polarizer_b(alpha):
    """Projector for a linear polarizer at ``alpha`` on side B."""
    c, s = cos(alpha), sin(alpha)
    cc, cs, ss = c * c, c * s, s * s
    return np.array(
        [
            [cc, cs, 0, 0],
            [cs, ss, 0, 0],
            [0, 0, cc, cs],
            [0, 0, cs, ss],
        ],
        dtype=np.complex128,
    )


def polarizer_a_stack(angles):
    """``polarizer_a`` for each angle, shape ``(len(angles), 4, 4)``."""
    return np.stack([polarizer_a(a) for a in angles])


def polarizer_b_stack(angles):
    return np.stack([polarizer_b(a) for a in angles])


def conjugate_by(u, m):
    """``u^-1 m u`` for unitary ``u``."""
    u = as_matrix(u)
    return u.conj().T @ as_matrix(m) @ u


def swap_parties(m):
    """Relabel a <-> b: conjugation by the SWAP permutation."""
    m = as_matrix(m)
    return m[np.ix_(_PARTY_SWAP, _PARTY_SWAP)]


def swap_axes(m):
    """Relabel x <-> y on both parties."""
    m = as_matrix(m)
    return m[np.ix_(_AXIS_SWAP, _AXIS_SWAP)]


def circular_basis_vector(kind="LR_sym"):
    """Expand (|L_a R_b> + |R_a L_b>)/sqrt(2) into the linear basis.

    Uses |L> = (|x> + i|y>)/sqrt(2) and |R> = (|x> - i|y>)/sqrt(2).
    """
    if kind != "LR_sym":
        raise ValueError(f"unknown circular-basis vector {kind!r}")
    left = np.array([1, 1j]) / sqrt(2)
    right = np.array([1, -1j]) / sqrt(2)
    return (np.kron(left, right) + np.kron(right, left)) / sqrt(2)
