"""Residuals for the physical constraints and classical symmetries of a two-qubit state.

Every residual is a Frobenius distance (or a plain scalar gap) that is zero
when the constraint holds exactly.
"""
import enum
from dataclasses import asdict, dataclass, field
from math import pi

import numpy as np

from .derivation import AtomicMode, atomic_residual
from .entanglement import concurrence
from .linalg import frobenius_norm
from .operators import conjugate_by, rotation_both, swap_axes, swap_parties, twist
from .states import as_array, validate_density

DEFAULT_GRID = 32
_HALF_IDENTITY = 0.5 * np.eye(2)


class Transform(enum.Enum):
    SWAP_PARTIES = "swap_parties"
    SWAP_AXES = "swap_axes"


def partial_trace_a(rho):
    """Reduced state of subsystem A (subsystem B traced out)."""
    return np.einsum("ijkj->ik", as_array(rho).reshape(2, 2, 2, 2))


def partial_trace_b(rho):
    """Reduced state of subsystem B (subsystem A traced out)."""
    return np.einsum("jijk->ik", as_array(rho).reshape(2, 2, 2, 2))


def reduced_residuals(rho):
    """Distances of both single-qubit reduced states from the unpolarized state I/2."""
    return (frobenius_norm(partial_trace_a(rho) - _HALF_IDENTITY),
            frobenius_norm(partial_trace_b(rho) - _HALF_IDENTITY))


def invariance_residual(rho, transform):
    m = as_array(rho)
    op = swap_parties if Transform(transform) is Transform.SWAP_PARTIES else swap_axes
    return frobenius_norm(op(m) - m)


def _angle_grid(grid_size):
    if grid_size < 4:
        raise ValueError("grid_size must be at least 4")
    return np.arange(grid_size) * (pi / grid_size)


def _conjugation_residual(rho, make_operator, grid_size):
    m = as_array(rho)
    return max(frobenius_norm(conjugate_by(make_operator(t), m) - m) for t in _angle_grid(grid_size))


def rotational_residual(rho, grid_size=DEFAULT_GRID):
    """Worst deviation under equal rotations of both parties, theta on a grid over [0, pi)."""
    return _conjugation_residual(rho, rotation_both, grid_size)


def twist_residual(rho, grid_size=DEFAULT_GRID):
    """As rotational_residual with opposite rotations on A and B."""
    return _conjugation_residual(rho, twist, grid_size)


@dataclass(frozen=True)
class SymmetryReport:
    hermiticity_residual: float
    trace_residual: float
    min_eigenvalue: float
    reduced_a_residual: float
    reduced_b_residual: float
    swap_parties_residual: float
    swap_axes_residual: float
    rotational_residual: float
    twist_residual: float
    atomic_residuals: dict = field(default_factory=dict)
    concurrence: float = 0.0

    def classical_residuals(self):
        """Residuals of the constraints that hold for every rotationally invariant physical state."""
        return {
            "hermiticity": self.hermiticity_residual,
            "trace": self.trace_residual,
            "reduced_a": self.reduced_a_residual,
            "reduced_b": self.reduced_b_residual,
            "swap_parties": self.swap_parties_residual,
            "swap_axes": self.swap_axes_residual,
            "rotational": self.rotational_residual,
        }

    def to_dict(self):
        return asdict(self)


def full_report(rho, grid_size=DEFAULT_GRID, atomic_grid=DEFAULT_GRID):
    """Validate ``rho`` and evaluate every residual plus the concurrence."""
    rho = validate_density(rho)
    red_a, red_b = reduced_residuals(rho)
    return SymmetryReport(
        hermiticity_residual=rho.hermiticity_residual,
        trace_residual=rho.trace_residual,
        min_eigenvalue=rho.min_eigenvalue,
        reduced_a_residual=red_a,
        reduced_b_residual=red_b,
        swap_parties_residual=invariance_residual(rho, Transform.SWAP_PARTIES),
        swap_axes_residual=invariance_residual(rho, Transform.SWAP_AXES),
        rotational_residual=rotational_residual(rho, grid_size),
        twist_residual=twist_residual(rho, grid_size),
        atomic_residuals={mode.value: atomic_residual(rho, mode, atomic_grid) for mode in AtomicMode},
        concurrence=concurrence(rho),
    )
