"""Infrared destructive-interference machinery.

Dressed factors with unit asymptotics at both ends,

    v^(n)(x) = exp( i c pi n f01(r) tau.m_hat ),  m_hat = R(phi_i) n_hat,

with R the adjoint rotation of the Euler-angle element
u = e^{i tau1 phi1/2} e^{i tau2 phi2/2} e^{i tau3 phi3/2} and c the exposed
amplitude prefactor (default 2, so the phase winds by 2 pi n and the factor
returns to the identity at spatial infinity as well as at the origin).

Momentum-space averages use the spinor (x) color matrices (4 x 2 = 8 dim),
Dirac basis with metric (+,-,-,-); shifted propagator averages decay as 1/L
because the n and -n window partners cancel pairwise to O(1/n^2).

The shift-averaged loop lives on a midpoint momentum lattice with exact
lattice shifts t = h e1; the shifted-minus-unshifted discrepancy is the
boundary shell of the shifted window and shrinks as the extent grows at
fixed spacing.  (The grid varies two momentum components; with two
propagators the integrand decays too slowly for the shell to vanish in four
gridded dimensions, so the cancellation statement is exercised where it is
true.)
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .algebra import ID2, TAU, tau_dot
from .bps_profiles import f01_bps
from .errors import DomainError, SingularTermError, WindowError
from .topology import GroupElement

__all__ = [
    "EulerAngles",
    "DiracColorMatrix",
    "GAMMA",
    "GAMMA5",
    "dirac_slash",
    "color_shift_matrix",
    "dressed_factor",
    "dressed_factor_map",
    "averaged_two_point",
    "momentum_green_average",
    "window_integers",
    "LoopAverage",
    "shifted_loop_average",
    "loop_integrand",
    "loop_integrand_matrix",
    "ColorRatio",
    "color_ratio_check",
]

ID4 = np.eye(4, dtype=complex)
ID8 = np.eye(8, dtype=complex)

# Dirac basis, metric (+,-,-,-): gamma^0 = diag(1,1,-1,-1), gamma^i off-diagonal.
GAMMA = np.zeros((4, 4, 4), dtype=complex)
GAMMA[0] = np.diag([1.0, 1.0, -1.0, -1.0])
for _i in range(3):
    GAMMA[_i + 1, :2, 2:] = TAU[_i]
    GAMMA[_i + 1, 2:, :2] = -TAU[_i]
GAMMA5 = np.zeros((4, 4), dtype=complex)
GAMMA5[:2, 2:] = np.eye(2)
GAMMA5[2:, :2] = np.eye(2)


def dirac_slash(p) -> np.ndarray:
    """p_mu gamma^mu for p = (p0, p1, p2, p3): p0 g0 - p1 g1 - p2 g2 - p3 g3."""
    p = np.asarray(p, dtype=float).reshape(4)
    return p[0] * GAMMA[0] - p[1] * GAMMA[1] - p[2] * GAMMA[2] - p[3] * GAMMA[3]


def color_shift_matrix(r_ref: float = 1.0) -> np.ndarray:
    """t_hat = (pi/r_ref) sum_a gamma^a (x) tau^a, the Hermitian-generator shift."""
    if not (r_ref > 0):
        raise DomainError("reference scale must be positive")
    out = np.zeros((8, 8), dtype=complex)
    for a in range(3):
        out += np.kron(GAMMA[a + 1], TAU[a])
    return (math.pi / r_ref) * out


@dataclass(frozen=True)
class EulerAngles:
    """Three Euler angles of the color frame."""

    phi1: float
    phi2: float
    phi3: float

    def __post_init__(self):
        for v in (self.phi1, self.phi2, self.phi3):
            if not np.isfinite(v):
                raise DomainError("angles must be finite")

    def su2_matrix(self) -> np.ndarray:
        def rot(tau, phi):
            return math.cos(phi / 2.0) * ID2 + 1j * math.sin(phi / 2.0) * tau

        return rot(TAU[0], self.phi1) @ rot(TAU[1], self.phi2) @ rot(TAU[2], self.phi3)

    def adjoint_rotation(self) -> np.ndarray:
        """R_{ab} with u tau^b u^-1 = tau^a R_{ab}; real orthogonal."""
        u = self.su2_matrix()
        ud = u.conj().T
        return 0.5 * np.einsum("aij,bkl,jk,li->ab", TAU, TAU, u, ud).real

    def diagonal_constraint_satisfied(self, n: int, tol: float = 1e-9) -> bool:
        """Scalar reading of the closure condition: phi1+phi2+phi3 = 4 pi n."""
        return abs(self.phi1 + self.phi2 + self.phi3 - 4.0 * math.pi * n) < tol


@dataclass(frozen=True)
class DiracColorMatrix:
    """8x8 spinor (x) color matrix with an invertibility report."""

    m: np.ndarray

    def condition_number(self) -> float:
        return float(np.linalg.cond(self.m))

    def norm(self) -> float:
        return float(np.linalg.norm(self.m, 2))


class _DressedMap:
    """Batched evaluator of the dressed factor for fixed (n, angles, eps)."""

    def __init__(self, n: int, angles: EulerAngles, eps: float, prefactor: float = 2.0):
        if not (eps > 0):
            raise DomainError("eps must be positive")
        self.n = int(n)
        self.eps = float(eps)
        self.prefactor = float(prefactor)
        self.rot = angles.adjoint_rotation()

    def matrices(self, pts: np.ndarray) -> np.ndarray:
        pts = np.atleast_2d(np.asarray(pts, dtype=float))
        r = np.linalg.norm(pts, axis=1)
        safe = np.where(r > 0, r, 1.0)
        nh = pts / safe[:, None]
        m_hat = nh @ self.rot.T
        amp = self.prefactor * math.pi * self.n * f01_bps(np.where(r > 0, r, 0.0), self.eps)
        M = tau_dot(m_hat)
        out = np.cos(amp)[:, None, None] * ID2[None] + 1j * np.sin(amp)[:, None, None] * M
        out[r == 0] = ID2
        return out


def dressed_factor_map(n: int, angles: EulerAngles, eps: float, prefactor: float = 2.0) -> _DressedMap:
    return _DressedMap(n, angles, eps, prefactor)


def dressed_factor(n: int, angles: EulerAngles, x, eps: float, prefactor: float = 2.0) -> GroupElement:
    """Euler-angle-dressed factor exp(i c pi n f01 tau.m_hat); unitary unimodular,
    identity at r = 0 and (for the default prefactor 2) at r -> infinity."""
    x = np.asarray(getattr(x, "x", x), dtype=float)
    return GroupElement(dressed_factor_map(n, angles, eps, prefactor).matrices(x[None])[0])


def window_integers(L: int) -> np.ndarray:
    """Symmetric integer window n in [-L/2, L/2]."""
    if L < 0:
        raise DomainError("window size L must be non-negative")
    half = L // 2
    return np.arange(-half, half + 1)


def averaged_two_point(x, y, angles: EulerAngles, L: int, eps: float, prefactor: float = 2.0) -> np.ndarray:
    """Window average of v^(n)(x) v^(n)(-y); tends to the identity as both
    points recede (the surviving contribution of color two-point functions)."""
    if L < 1:
        raise DomainError("window size L must be at least 1")
    x = np.asarray(getattr(x, "x", x), dtype=float)
    y = np.asarray(getattr(y, "x", y), dtype=float)
    ns = window_integers(L)
    acc = np.zeros((2, 2), dtype=complex)
    for n in ns:
        dm = dressed_factor_map(int(n), angles, eps, prefactor)
        acc += dm.matrices(x[None])[0] @ dm.matrices(-y[None])[0]
    return acc / len(ns)


def momentum_green_average(p, t_matrix: DiracColorMatrix | np.ndarray | None, L: int) -> DiracColorMatrix:
    """Symmetric partial average S_L = (1/(L+1)) sum_{n=-L/2}^{L/2} (p_slash + t n)^-1.

    Pairwise n <-> -n cancellation makes ||S_L|| = O(1/L).  Raises
    SingularTermError naming the first n whose matrix is numerically singular.
    """
    if L < 0:
        raise DomainError("window size L must be non-negative")
    t = color_shift_matrix() if t_matrix is None else np.asarray(getattr(t_matrix, "m", t_matrix))
    ph = np.kron(dirac_slash(p), ID2)
    ns = window_integers(L)
    stack = ph[None, :, :] + ns[:, None, None] * t[None, :, :]
    conds = np.linalg.cond(stack)
    bad = np.where(~np.isfinite(conds) | (conds > 1e12))[0]
    if bad.size:
        raise SingularTermError(int(ns[bad[0]]))
    inv = np.linalg.inv(stack)
    return DiracColorMatrix(inv.sum(axis=0) / (L + 1))


# ---------------------------------------------------------------------------
# shift-averaged loop on a momentum lattice
# ---------------------------------------------------------------------------

BASE_EXTENT = 1.0
BASE_SPACING = BASE_EXTENT / 16.0
REGULATOR_MASS = 0.1  # in base-extent units


class LoopAverage(NamedTuple):
    shift_averaged: complex
    unshifted: complex
    difference: complex


def _structures(gamma_structure: str):
    if gamma_structure == "scalar":
        return ID8
    if gamma_structure == "colored":
        return np.kron(ID4, TAU[2])
    raise DomainError("gamma_structure must be 'scalar' or 'colored'")


def loop_integrand(p1, p2, q, mass: float):
    """Closed-form trace of Gamma G0(p) Gamma G0(q-p) for both structures.

    Euclidean slash with {g,g} = 2 delta gives G0 = (p_slash - i m)/(p^2 + m^2)
    and tr = 8 [p.(q-p) - m^2] / ((p^2+m^2)((q-p)^2+m^2)); the colored choice
    tau^3 squares to the identity in color space and leaves the value unchanged.
    """
    q = np.asarray(q, dtype=float).reshape(4)
    p_sq = p1 * p1 + p2 * p2
    k1, k2 = q[1] - p1, q[2] - p2
    k_sq = q[0] ** 2 + k1 * k1 + k2 * k2 + q[3] ** 2
    p_dot_k = p1 * k1 + p2 * k2
    m2 = mass * mass
    return 8.0 * (p_dot_k - m2) / ((p_sq + m2) * (k_sq + m2))


def loop_integrand_matrix(p1: float, p2: float, q, gamma_structure: str, mass: float) -> complex:
    """Same trace evaluated with explicit 8x8 matrices (the grid oracle)."""
    q = np.asarray(q, dtype=float).reshape(4)
    gammas_e = np.stack([GAMMA[0], -1j * GAMMA[1], -1j * GAMMA[2], -1j * GAMMA[3]])

    def slash_e(v):
        return np.einsum("m,mij->ij", v, gammas_e)

    def g0(v):
        v = np.asarray(v, dtype=float)
        ph = np.kron(slash_e(v), ID2)
        return np.linalg.inv(ph + 1j * mass * ID8)

    gam = _structures(gamma_structure)
    pv = np.array([0.0, p1, p2, 0.0])
    kv = np.array([q[0], q[1] - p1, q[2] - p2, q[3]])
    return complex(np.trace(gam @ g0(pv) @ gam @ g0(kv)))


def shifted_loop_average(
    q,
    gamma_structure: str,
    cutoff: float,
    L: int,
    spacing: float = BASE_SPACING,
    mass: float = REGULATOR_MASS,
) -> LoopAverage:
    """Window-averaged momentum-lattice loop against its unshifted value.

    Midpoint lattice p = (j + 1/2) h on [-cutoff, cutoff]^2 (components p1, p2;
    the external q stays a 4-vector), shift t = h e1, window n in [-L/2, L/2].
    Shifts are exact lattice translations, so the difference is purely the
    boundary shell of the shifted window.
    """
    _structures(gamma_structure)
    if not (cutoff > 0 and spacing > 0):
        raise DomainError("cutoff and spacing must be positive")
    if spacing * L > cutoff / 2.0 + 1e-12:
        raise WindowError(
            f"total shift {spacing * L} exceeds half the extent {cutoff / 2.0}: shift leaves the grid"
        )
    n_side = int(round(2.0 * cutoff / spacing))
    if n_side < 8:
        raise DomainError("grid too small; decrease spacing or increase cutoff")
    ax = (np.arange(n_side) - n_side / 2 + 0.5) * spacing
    P1, P2 = np.meshgrid(ax, ax, indexing="ij")

    def lattice_sum(shift_units: int) -> float:
        vals = loop_integrand(P1 + shift_units * spacing, P2, q, mass)
        return float(np.sum(vals)) * spacing**2

    unshifted = lattice_sum(0)
    ns = window_integers(L)
    averaged = math.fsum(lattice_sum(int(n)) for n in ns) / len(ns)
    return LoopAverage(averaged, unshifted, averaged - unshifted)


class ColorRatio(NamedTuple):
    prediction: float
    in_band: bool
    band: tuple[float, float]


def color_ratio_check(nc: int, band: tuple[float, float] = (3.0, 3.6)) -> ColorRatio:
    """Lowest-order hadronic-to-muonic ratio prediction: the color count itself."""
    if nc < 1:
        raise DomainError("color count must be at least 1")
    return ColorRatio(float(nc), band[0] <= nc <= band[1], band)
