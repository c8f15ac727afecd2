"""Parametric state families, the atomic-symmetry condition and the Bell states it selects.

The symmetric family ``rho_aux(c, d, f, g)`` already satisfies the physical
constraints and the a<->b / x<->y relabelling invariances. Imposing
rotational (or twist) invariance leaves the two-parameter families
``rho_R(c, d)`` and ``rho_T(c, d)``. The atomic-symmetry condition compares
two polarizers on side A with one polarizer on each side; it fixes ``d``,
after which the positivity interval collapses and fixes ``c``.
"""
import enum
from dataclasses import dataclass
from math import pi, sqrt
from typing import NamedTuple

import numpy as np

from .errors import NoSolution, UnknownKind
from .linalg import projector
from .operators import polarizer_a, polarizer_a_stack, polarizer_b, polarizer_b_stack
from .states import DensityMatrix, as_array, validate_density

FEASIBILITY_TOL = 1e-10
SOLVE_TOL = 1e-10
STANDARD_CHSH_ANGLES = (0.0, pi / 4, pi / 8, 3 * pi / 8)  # a, a', b, b'


@dataclass(frozen=True)
class ParamSet:
    c: float
    d: float
    f: float = 0.0
    g: float = 0.0


class Family(enum.Enum):
    ROTATIONAL = "rotational"
    TWIST = "twist"


class AtomicMode(enum.Enum):
    """Angle substitution applied to the side-A polarizer on the two-sided measurement."""

    PARALLEL = "parallel"
    CROSSED = "crossed"
    TWIST = "twist"
    TWIST_CROSSED = "twist_crossed"

    def rhs_angle(self, alpha):
        if self is AtomicMode.PARALLEL:
            return alpha
        if self is AtomicMode.CROSSED:
            return alpha + pi / 2
        if self is AtomicMode.TWIST:
            return -alpha
        return -alpha + pi / 2

    @classmethod
    def from_name(cls, name):
        key = name.strip().lower().replace("-", "_")
        try:
            return cls(key)
        except ValueError:
            raise UnknownKind(f"unknown atomic mode {name!r}; expected one of "
                              f"{', '.join(m.value.replace('_', '-') for m in cls)}") from None


class BellKind(enum.Enum):
    PHI_PLUS = "phi_plus"
    PHI_MINUS = "phi_minus"
    PSI_PLUS = "psi_plus"
    PSI_MINUS = "psi_minus"

    @property
    def family(self):
        return _KIND_TABLE[self][0]

    @property
    def mode(self):
        return _KIND_TABLE[self][1]

    @property
    def label(self):
        return {"phi_plus": "phi+", "phi_minus": "phi-", "psi_plus": "psi+", "psi_minus": "psi-"}[self.value]

    @classmethod
    def from_name(cls, name):
        key = name.strip().lower().replace("+", "_plus").replace("-", "_minus")
        key = key.replace("__", "_")
        try:
            return cls(key)
        except ValueError:
            raise UnknownKind(f"unknown Bell state {name!r}; expected phi+, phi-, psi+ or psi-") from None


_KIND_TABLE = {
    BellKind.PHI_PLUS: (Family.ROTATIONAL, AtomicMode.PARALLEL),
    BellKind.PSI_MINUS: (Family.ROTATIONAL, AtomicMode.CROSSED),
    BellKind.PHI_MINUS: (Family.TWIST, AtomicMode.TWIST),
    BellKind.PSI_PLUS: (Family.TWIST, AtomicMode.TWIST_CROSSED),
}


def build_rho_aux(p):
    """The relabelling-invariant matrix with real parameters ``c, d, f, g``."""
    c, d, f, g = p.c, p.d, p.f, p.g
    h = 0.5 - d
    return np.array(
        [
            [d, 1j * g, 1j * g, c],
            [-1j * g, h, f, -1j * g],
            [-1j * g, f, h, -1j * g],
            [c, 1j * g, 1j * g, d],
        ],
        dtype=np.complex128,
    )


def build_rho_r(c, d):
    """Rotationally invariant member: ``g = 0`` and ``f = 2d - c - 1/2``."""
    return build_rho_aux(ParamSet(c=c, d=d, f=2 * d - c - 0.5, g=0.0))


def build_rho_t(c, d):
    """Twist-invariant member: ``g = 0`` and ``f = -2d - c + 1/2``."""
    return build_rho_aux(ParamSet(c=c, d=d, f=-2 * d - c + 0.5, g=0.0))


def build_family(family, c, d):
    return build_rho_r(c, d) if Family(family) is Family.ROTATIONAL else build_rho_t(c, d)


def positivity_feasible(family, c, d):
    """Closed-form positivity test for ``rho_R`` (uses d - c) or ``rho_T`` (uses d + c).

    Holds iff ``1/2 +- |2d - 1/2| >= s >= 0`` for both signs, with the
    boundary relaxed by ``FEASIBILITY_TOL``.
    """
    s = d - c if Family(family) is Family.ROTATIONAL else d + c
    spread = abs(2 * d - 0.5)
    return s >= -FEASIBILITY_TOL and all(0.5 + sign * spread - s >= -FEASIBILITY_TOL for sign in (1, -1))


def feasible_c_interval(family, d):
    """The closed interval of ``c`` allowed by positivity at fixed ``d``; ``lo > hi`` when empty."""
    width = 0.5 - abs(2 * d - 0.5)
    if Family(family) is Family.ROTATIONAL:
        return d - width, d
    return -d, width - d


def coincidence(rho, alpha, beta):
    """Probability that both photons pass polarizers at ``alpha`` (A) and ``beta`` (B)."""
    m = as_array(rho)
    return float(np.real(np.trace(m @ polarizer_a(alpha) @ polarizer_b(beta))))


def atomic_lhs(rho, alpha, beta):
    """Both polarizers on side A: ``Tr[rho Q_A(beta)^H Q_A(alpha) Q_A(beta)]``."""
    m = as_array(rho)
    qb = polarizer_a(beta)
    return float(np.real(np.trace(m @ qb.conj().T @ polarizer_a(alpha) @ qb)))


def atomic_rhs(rho, alpha, beta, mode):
    """One polarizer per side, with the side-A angle substituted per ``mode``."""
    return coincidence(rho, AtomicMode(mode).rhs_angle(alpha), beta)


def _atomic_difference_grid(m, angles, mode):
    qa = polarizer_a_stack(angles)
    qa_mapped = polarizer_a_stack([mode.rhs_angle(a) for a in angles])
    qb = polarizer_b_stack(angles)
    # sandwich[i, j] = Q_A(beta_j)^H Q_A(alpha_i) Q_A(beta_j)
    sandwich = np.einsum("jba,ibc,jcd->ijad", qa.conj(), qa, qa)
    lhs = np.einsum("da,ijad->ij", m, sandwich).real
    rhs = np.einsum("da,iab,jbd->ij", m, qa_mapped, qb).real
    return lhs - rhs


def atomic_residual(rho, mode, grid_size=32):
    """Largest ``|lhs - rhs|`` over the uniform ``(alpha, beta)`` grid on ``[0, pi)^2``."""
    if grid_size < 8:
        raise ValueError("grid_size must be at least 8")
    angles = np.arange(grid_size) * (pi / grid_size)
    return float(np.abs(_atomic_difference_grid(as_array(rho), angles, AtomicMode(mode))).max())


class AtomicSolution(NamedTuple):
    d: float
    c: float
    rho: DensityMatrix


_SAMPLE_DELTAS = (0.0, pi / 8, pi / 4)
_SAMPLE_BETAS = (0.0, 0.3)


def _sampled_difference(family, mode, c, d):
    m = build_family(family, c, d)
    return np.array([
        atomic_lhs(m, beta + delta, beta) - atomic_rhs(m, beta + delta, beta, mode)
        for beta in _SAMPLE_BETAS
        for delta in _SAMPLE_DELTAS
    ])


def solve_atomic(kind):
    """Impose the atomic symmetry on the kind's family and return ``(d, c, rho)``.

    lhs - rhs is affine in ``(c, d)``; its coefficients are recovered from the
    sampled angles and the resulting linear conditions are solved. When they
    leave ``c`` free it is pinned by the positivity interval, which must have
    collapsed to a point.
    """
    kind = BellKind(kind)
    family, mode = kind.family, kind.mode
    base = _sampled_difference(family, mode, 0.0, 0.0)
    coef_d = _sampled_difference(family, mode, 0.0, 1.0) - base
    coef_c = _sampled_difference(family, mode, 1.0, 0.0) - base
    system = np.column_stack([coef_d, coef_c])
    rank = np.linalg.matrix_rank(system, tol=SOLVE_TOL)

    if rank == 0:
        raise NoSolution(f"atomic symmetry places no condition on {kind.label}")
    if rank == 2:
        d, c = np.linalg.lstsq(system, -base, rcond=None)[0]
    elif np.abs(coef_c).max() <= SOLVE_TOL:
        d = -float(coef_d @ base) / float(coef_d @ coef_d)
        lo, hi = feasible_c_interval(family, d)
        if hi - lo < -SOLVE_TOL or hi - lo > SOLVE_TOL:
            raise NoSolution(f"positivity leaves c in [{lo:.6g}, {hi:.6g}] for {kind.label}")
        c = 0.5 * (lo + hi)
    else:
        raise NoSolution(f"atomic symmetry fixes only a combination of c and d for {kind.label}")

    d, c = float(d), float(c)
    if np.abs(base + d * coef_d + c * coef_c).max() > SOLVE_TOL:
        raise NoSolution(f"sampled atomic-symmetry conditions are inconsistent for {kind.label}")
    rho = validate_density(build_family(family, c, d))
    if atomic_residual(rho, mode, 16) > SOLVE_TOL:
        raise NoSolution(f"solution for {kind.label} violates the atomic symmetry off the sample grid")
    return AtomicSolution(d, c, rho)


def bell_state(kind):
    r = 1 / sqrt(2)
    vectors = {
        BellKind.PHI_PLUS: (r, 0, 0, r),
        BellKind.PHI_MINUS: (r, 0, 0, -r),
        BellKind.PSI_PLUS: (0, r, r, 0),
        BellKind.PSI_MINUS: (0, r, -r, 0),
    }
    return np.array(vectors[BellKind(kind)], dtype=np.complex128)


def bell_density(kind):
    return validate_density(projector(bell_state(kind)))


def rot_invariant_basis():
    """phi+, psi-, and the two circular combinations of phi- and psi+."""
    phi_m = bell_state(BellKind.PHI_MINUS)
    psi_p = bell_state(BellKind.PSI_PLUS)
    r = 1 / sqrt(2)
    return [
        bell_state(BellKind.PHI_PLUS),
        bell_state(BellKind.PSI_MINUS),
        r * (phi_m - 1j * psi_p),
        r * (phi_m + 1j * psi_p),
    ]


def semiclassical_state():
    """Pairs sharing one polarization, uniformly distributed over orientations."""
    return validate_density(np.array([[3, 0, 0, 1], [0, 1, 1, 0], [0, 1, 1, 0], [1, 0, 0, 3]]) / 8)


def correlation(rho, alpha, beta):
    """``E(alpha, beta)``: pass/pass and block/block minus the mixed outcomes."""
    ap, bp = alpha + pi / 2, beta + pi / 2
    return (coincidence(rho, alpha, beta) + coincidence(rho, ap, bp)
            - coincidence(rho, ap, beta) - coincidence(rho, alpha, bp))


def chsh_score(rho, angles=STANDARD_CHSH_ANGLES):
    """``|E(a,b) - E(a,b') + E(a',b) + E(a',b')|`` for ``angles = (a, a', b, b')``."""
    a, a2, b, b2 = angles
    return abs(correlation(rho, a, b) - correlation(rho, a, b2)
               + correlation(rho, a2, b) + correlation(rho, a2, b2))
