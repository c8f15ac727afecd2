"""Concurrence and the epsilon-deformed family around phi+."""
import enum
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .derivation import AtomicMode, Family, build_rho_r, positivity_feasible
from .derivation import atomic_residual as _atomic_residual
from .errors import InfeasibleEpsilon, ValidationError
from .linalg import hermitian_eigenvalues, hermitian_sqrt
from .states import as_array, validate_density

# sigma_y (x) sigma_y in the product basis
SPIN_FLIP = np.array(
    [[0, 0, 0, -1], [0, 0, 1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]], dtype=np.complex128
)
# eigenvalues of sqrt(rho) rho~ sqrt(rho) below this are round-off from a
# rank-deficient product; square-rooting them would inject ~1e-8 errors
SPECTRUM_FLOOR = 1e-13
EPSILON_MAX = 1 / 6


def spin_flip(rho):
    """Wootters' spin-flipped state ``(Y x Y) rho* (Y x Y)``."""
    return SPIN_FLIP @ as_array(rho).conj() @ SPIN_FLIP


def concurrence(rho):
    """Wootters concurrence ``max(0, l1 - l2 - l3 - l4)``, clamped to [0, 1].

    The ``l_i`` are the square roots of the eigenvalues of the Hermitian
    matrix ``sqrt(rho) rho~ sqrt(rho)``, in decreasing order.
    """
    m = as_array(rho)
    root = hermitian_sqrt(m)
    mu = hermitian_eigenvalues(root @ spin_flip(m) @ root)
    mu = np.where(mu > SPECTRUM_FLOOR, mu, 0.0)
    lam = np.sqrt(mu)
    return float(min(1.0, max(0.0, lam[0] - lam[1] - lam[2] - lam[3])))


def concurrence_pure_oracle(psi):
    """Closed form ``2|ad - bc|`` for a pure state with amplitudes ``(a, b, c, d)``."""
    a, b, c, d = np.asarray(psi, dtype=np.complex128)
    return float(2 * abs(a * d - b * c))


class CChoice(enum.Enum):
    LOW = "low"
    MIDDLE = "middle"
    HIGH = "high"

    def c_of(self, epsilon):
        k = {"low": 3, "middle": 2, "high": 1}[self.value]
        return 0.5 - k * epsilon


@dataclass(frozen=True)
class EpsilonFamily:
    """``rho_R`` with ``d = 1/2 - epsilon`` and ``c`` chosen inside the positivity interval."""

    epsilon: float
    c_choice: CChoice = CChoice.MIDDLE

    def __post_init__(self):
        object.__setattr__(self, "c_choice", CChoice(self.c_choice))
        if not 0.0 <= self.epsilon <= EPSILON_MAX:
            raise InfeasibleEpsilon(f"epsilon must lie in [0, 1/6], got {self.epsilon!r}")

    @property
    def d(self):
        return 0.5 - self.epsilon

    @property
    def c(self):
        return self.c_choice.c_of(self.epsilon)


def epsilon_state(fam):
    if not positivity_feasible(Family.ROTATIONAL, fam.c, fam.d):
        raise InfeasibleEpsilon(f"(c={fam.c:.6g}, d={fam.d:.6g}) violates positivity")
    try:
        return validate_density(build_rho_r(fam.c, fam.d))
    except ValidationError as exc:
        raise InfeasibleEpsilon(str(exc)) from exc


class ScanPoint(NamedTuple):
    epsilon: float
    concurrence: float
    atomic_residual: float


def linearity_scan(c_choice, eps_max, steps, grid_size=32):
    """Concurrence and parallel-mode atomic residual on a uniform epsilon grid ``[0, eps_max]``."""
    if not 0.0 < eps_max <= 0.125:
        raise InfeasibleEpsilon(f"eps_max must be in (0, 1/8], got {eps_max!r}")
    if steps < 2:
        raise ValueError("steps must be at least 2")
    points = []
    for eps in np.linspace(0.0, eps_max, steps):
        rho = epsilon_state(EpsilonFamily(float(eps), c_choice))
        points.append(ScanPoint(float(eps), concurrence(rho),
                                _atomic_residual(rho, AtomicMode.PARALLEL, grid_size)))
    return points


def fitted_slope(points):
    """Least-squares slope of concurrence against epsilon."""
    eps = np.array([p.epsilon for p in points])
    conc = np.array([p.concurrence for p in points])
    slope, _ = np.polyfit(eps, conc, 1)
    return float(slope)
