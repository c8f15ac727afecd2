"""Symmetry checks, Bell-state derivation and concurrence for two-qubit polarization states."""
__version__ = "0.1.0"

from .constraints import SymmetryReport, full_report
from .derivation import AtomicMode, BellKind, Family, ParamSet, bell_state, solve_atomic
from .entanglement import EpsilonFamily, concurrence
from .states import DensityMatrix, validate_density

__all__ = [
    "AtomicMode",
    "BellKind",
    "DensityMatrix",
    "EpsilonFamily",
    "Family",
    "ParamSet",
    "SymmetryReport",
    "bell_state",
    "concurrence",
    "full_report",
    "solve_atomic",
    "validate_density",
]
