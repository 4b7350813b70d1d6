"""Winding-number and degree-of-map integrals over exponentiated phase factors.

The stationary group factor with winding index n is

    v^(n)(x) = exp(-i pi n f(r) tau.n_hat) = cos(pi n f) 1 - i sin(pi n f) tau.n_hat,

where the radial profile f satisfies f(0) = 0 and f(r) -> 1 (default: the
smooth phase profile f01).  For odd n the factor tends to the central element
-1 at spatial infinity; no asymptotic is asserted here (the interference
module carries the dressed factors with unit asymptotics).

The degree of the map is computed as

    N[n] = -1/(24 pi^2) int d^3x eps^{ijk} tr[ L_i L_j L_k ],   L_i = v^-1 d_i v,

and the Chern-Simons winding functional, with A_hat_i = g tau^a A_i^a/(2i), as

    X[A] = -1/(8 pi^2) int d^3x eps^{ijk} tr[ A_hat_i d_j A_hat_k
                                              + (2/3) A_hat_i A_hat_j A_hat_k ].

Orientation fixed so that N[n] = n and X[pure gauge v^(n)] = n; the two are
also cross-checked against the 1D radial reduction
(1/pi)[alpha - sin(alpha) cos(alpha)] evaluated between r = 0 and infinity.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np
from numpy.polynomial.legendre import leggauss

from .algebra import EPS3, ID2, TAU, det_defect, su2_components_from_matrix, su2_matrix_from_components, tau_dot, unitarity_defect
from .bps_profiles import ColorAlgebraField, StencilConfig, d_f01_bps, f01_bps
from .errors import ContractError, DomainError, ResolutionError, TruncationError

__all__ = [
    "GroupElement",
    "AlgebraElement",
    "QuadratureSpec",
    "GribovFactorMap",
    "gribov_factor",
    "gribov_phase_matrix",
    "map_degree",
    "map_degree_radial_oracle",
    "winding_functional",
    "gauge_transform",
    "instanton_amplitude",
    "surface_flux_term",
]

_MATRIX_TOL = 1e-12


@dataclass(frozen=True)
class GroupElement:
    """2x2 unitary unimodular matrix."""

    m: np.ndarray

    def validate(self, tol: float = _MATRIX_TOL) -> "GroupElement":
        if unitarity_defect(self.m) > tol or det_defect(self.m) > tol:
            raise ContractError("matrix is not unitary unimodular to tolerance")
        return self

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(self.m @ other.m)

    def distance_to_identity(self) -> float:
        return float(np.linalg.norm(self.m - ID2, 2))


@dataclass(frozen=True)
class AlgebraElement:
    """2x2 anti-Hermitian traceless matrix."""

    a: np.ndarray

    def validate(self, tol: float = _MATRIX_TOL) -> "AlgebraElement":
        if np.linalg.norm(self.a + self.a.conj().T, 2) > tol or abs(np.trace(self.a)) > tol:
            raise ContractError("matrix is not anti-Hermitian traceless to tolerance")
        return self


@dataclass(frozen=True)
class QuadratureSpec:
    """Spherical product rule over the ball of radius r_max.

    Radial nodes are Gauss-Legendre in the compactified variable u,
    r = eps_ref tan(pi u/2) (or uniform with trapezoid weights), Gauss-Legendre
    in cos(theta), uniform midpoint in azimuth.
    """

    r_max: float
    n_r: int = 48
    n_theta: int = 24
    n_phi: int = 24
    rule: str = "GaussLegendre"

    def __post_init__(self):
        if min(self.n_r, self.n_theta, self.n_phi) < 16:
            raise DomainError("node counts must be at least 16")
        if self.rule not in ("GaussLegendre", "Trapezoid"):
            raise DomainError(f"unknown quadrature rule {self.rule!r}")

    def check_reaches(self, eps_ref: float):
        if self.r_max < 50.0 * eps_ref:
            raise DomainError(f"r_max={self.r_max} must be at least 50x the profile scale {eps_ref}")

    def refined(self, factor: float = 1.5) -> "QuadratureSpec":
        return QuadratureSpec(
            self.r_max,
            int(np.ceil(self.n_r * factor)),
            int(np.ceil(self.n_theta * factor)),
            int(np.ceil(self.n_phi * factor)),
            self.rule,
        )

    def _radial(self, eps_ref: float):
        if self.rule == "Trapezoid":
            r = np.linspace(self.r_max / self.n_r, self.r_max, self.n_r)
            w = np.full(self.n_r, self.r_max / self.n_r)
            w[-1] *= 0.5
            return r, w
        u_max = (2.0 / np.pi) * np.arctan(self.r_max / eps_ref)
        u, wu = leggauss(self.n_r)
        u = 0.5 * u_max * (u + 1.0)
        wu = 0.5 * u_max * wu
        r = eps_ref * np.tan(0.5 * np.pi * u)
        dr_du = eps_ref * (0.5 * np.pi) / np.cos(0.5 * np.pi * u) ** 2
        return r, wu * dr_du

    def ball_nodes(self, eps_ref: float = 1.0):
        """Nodes (N, 3) and weights (N,) including the r^2 volume factor."""
        r, wr = self._radial(eps_ref)
        if self.rule == "Trapezoid":
            ct = np.linspace(-1.0, 1.0, self.n_theta)
            d = ct[1] - ct[0]
            wc = np.full(self.n_theta, d)
            wc[0] = wc[-1] = 0.5 * d
        else:
            ct, wc = leggauss(self.n_theta)
        phi = 2.0 * np.pi * (np.arange(self.n_phi) + 0.5) / self.n_phi
        wp = 2.0 * np.pi / self.n_phi
        st = np.sqrt(np.maximum(0.0, 1.0 - ct**2))
        dirs = np.stack(
            [
                np.outer(st, np.cos(phi)),
                np.outer(st, np.sin(phi)),
                np.outer(ct, np.ones_like(phi)),
            ],
            axis=-1,
        ).reshape(-1, 3)
        wdir = (wc[:, None] * wp * np.ones_like(phi)[None, :]).reshape(-1)
        pts = (r[:, None, None] * dirs[None, :, :]).reshape(-1, 3)
        wts = (wr * r**2)[:, None] * wdir[None, :]
        return pts, wts.reshape(-1)


# ---------------------------------------------------------------------------
# group factors
# ---------------------------------------------------------------------------

def _check_profile(profile: Callable, eps_ref: float):
    at0 = float(np.asarray(profile(0.0)).reshape(-1)[0])
    at_inf = float(np.asarray(profile(1e3 * eps_ref)).reshape(-1)[0])
    if abs(at0) > 1e-8:
        raise ContractError("profile must vanish at r = 0")
    if abs(at_inf - 1.0) > 5e-3:
        raise ContractError("profile must approach 1 at r = 1e3 * eps_ref")


class GribovFactorMap:
    """Map x -> v^(n)(x) with exact closed-form derivatives.

    v = cos(A) 1 - i sin(A) tau.n_hat with A(r) = pi n f(r).
    """

    def __init__(self, n: int, eps_ref: float = 1.0, profile=None, d_profile=None, check: bool = True):
        self.n = int(n)
        self.eps_ref = float(eps_ref)
        self.profile = profile or (lambda r: f01_bps(r, self.eps_ref))
        self.d_profile = d_profile if profile is not None else (lambda r: d_f01_bps(r, self.eps_ref))
        if check:
            _check_profile(self.profile, self.eps_ref)

    def _amplitude(self, r):
        return np.pi * self.n * self.profile(r)

    def matrices(self, pts: np.ndarray) -> np.ndarray:
        pts = np.atleast_2d(np.asarray(pts, dtype=float))
        r = np.linalg.norm(pts, axis=1)
        safe = np.where(r > 0, r, 1.0)
        nh = pts / safe[:, None]
        A = self._amplitude(r)
        M = tau_dot(nh)
        out = np.cos(A)[:, None, None] * ID2[None] - 1j * np.sin(A)[:, None, None] * M
        out[r == 0] = ID2
        return out

    def d_matrices(self, pts: np.ndarray) -> np.ndarray:
        """Exact d_i v, shape (N, 3, 2, 2); requires r > 0 at every point."""
        pts = np.atleast_2d(np.asarray(pts, dtype=float))
        r = np.linalg.norm(pts, axis=1)
        if np.any(r == 0):
            raise DomainError("derivative of the factor is undefined at r = 0")
        nh = pts / r[:, None]
        A = self._amplitude(r)
        if self.d_profile is None:
            h = 1e-6 * self.eps_ref
            dA = np.pi * self.n * (self.profile(r + h) - self.profile(r - h)) / (2 * h)
        else:
            dA = np.pi * self.n * self.d_profile(r)
        M = tau_dot(nh)
        ca, sa = np.cos(A), np.sin(A)
        dv = np.empty((len(pts), 3, 2, 2), dtype=complex)
        for i in range(3):
            dM = (TAU[i][None] - nh[:, i][:, None, None] * M) / r[:, None, None]
            dv[:, i] = (
                -(sa * dA * nh[:, i])[:, None, None] * ID2[None]
                - 1j * ((ca * dA * nh[:, i])[:, None, None] * M + sa[:, None, None] * dM)
            )
        return dv

    def __call__(self, x) -> GroupElement:
        x = getattr(x, "x", x)
        return GroupElement(self.matrices(np.asarray(x, dtype=float)[None])[0])


def gribov_factor(n: int, x, profile=None, eps_ref: float = 1.0) -> GroupElement:
    """Exponentiated phase factor exp(-i pi n f(r) tau.n_hat) at a point."""
    fmap = GribovFactorMap(n, eps_ref=eps_ref, profile=profile)
    return fmap(x)


def gribov_phase_matrix(x, eps_ref: float = 1.0) -> AlgebraElement:
    """Algebra element -i pi (tau.n_hat) f01(r); the log of the n = 1 factor."""
    x = np.asarray(getattr(x, "x", x), dtype=float)
    r = float(np.linalg.norm(x))
    if r == 0:
        return AlgebraElement(np.zeros((2, 2), dtype=complex))
    return AlgebraElement(-1j * np.pi * f01_bps(r, eps_ref) * tau_dot(x / r))


# ---------------------------------------------------------------------------
# integrals
# ---------------------------------------------------------------------------

def _degree_integral(fmap: GribovFactorMap, quad: QuadratureSpec) -> float:
    pts, wts = quad.ball_nodes(fmap.eps_ref)
    keep = np.linalg.norm(pts, axis=1) > 0
    pts, wts = pts[keep], wts[keep]
    v = fmap.matrices(pts)
    dv = fmap.d_matrices(pts)
    vd = v.conj().swapaxes(-1, -2)
    L = np.einsum("nab,nibc->niac", vd, dv)
    dens = np.einsum("ijk,niab,njbc,nkca->n", EPS3, L, L, L).real
    return float(-np.sum(wts * dens) / (24.0 * np.pi**2))


def map_degree(
    n: int,
    quad: QuadratureSpec,
    eps_ref: float = 1.0,
    profile=None,
    d_profile=None,
    check_resolution: bool = True,
) -> float:
    """Degree of the map of v^(n) by 3D quadrature; integer n to tolerance.

    Runs a refined node set when check_resolution is on and raises
    ResolutionError if the two levels disagree by more than 1e-2.
    """
    quad.check_reaches(eps_ref)
    fmap = GribovFactorMap(n, eps_ref=eps_ref, profile=profile, d_profile=d_profile)
    coarse = _degree_integral(fmap, quad)
    if not check_resolution:
        return coarse
    fine = _degree_integral(fmap, quad.refined())
    if abs(fine - coarse) > 1e-2:
        raise ResolutionError(
            f"degree quadrature under-resolved: {coarse} vs {fine} after refinement"
        )
    return fine


def map_degree_radial_oracle(n: int, profile=None, eps_ref: float = 1.0, r_inf: float = 1e6) -> float:
    """1D reduction (1/pi)[alpha - sin(alpha) cos(alpha)] with alpha = pi n f(r),
    evaluated between r = 0 and r -> infinity.  Independent of the 3D quadrature."""
    prof = profile or (lambda r: f01_bps(r, eps_ref))

    def F(r):
        a = np.pi * n * prof(r)
        return (a - np.sin(a) * np.cos(a)) / np.pi

    return float(F(r_inf) - F(0.0))


def winding_functional(
    field: ColorAlgebraField,
    quad: QuadratureSpec,
    g: float,
    stencil: StencilConfig | None = None,
    eps_ref: float = 1.0,
    tail_fraction: float | None = 1e-3,
) -> float:
    """Chern-Simons winding functional X[A] over the ball of radius r_max.

    The derivative term uses central differences on the sampler.  Raises
    TruncationError when the outer 10% radial shell carries more than
    tail_fraction of the accumulated absolute integrand; pass None to skip
    (e.g. when the boundary flux is being computed explicitly).
    """
    quad.check_reaches(eps_ref)
    stencil = stencil or StencilConfig(1e-3 * eps_ref, 4)
    pts, wts = quad.ball_nodes(eps_ref)
    keep = np.linalg.norm(pts, axis=1) > 10.0 * stencil.h
    pts, wts = pts[keep], wts[keep]
    A = field.sample(pts)  # (N, 3, 3)
    Ah = su2_matrix_from_components(A, g)  # (N, 3, 2, 2) via (..., 3) components per i
    # build d_j A_hat_k with batched shifted samples
    offs, wcoef = stencil.offsets_weights()
    dAh = np.zeros((len(pts), 3, 3, 2, 2), dtype=complex)  # [n][j][k]
    for j in range(3):
        acc = np.zeros((len(pts), 3, 2, 2), dtype=complex)
        for o, w in zip(offs, wcoef):
            shifted = pts.copy()
            shifted[:, j] += o * stencil.h
            acc += w * su2_matrix_from_components(field.sample(shifted), g)
        dAh[:, j] = acc
    term1 = np.einsum("ijk,niab,njkba->n", EPS3, Ah, dAh).real
    term2 = np.einsum("ijk,niab,njbc,nkca->n", EPS3, Ah, Ah, Ah).real
    dens = wts * (term1 + (2.0 / 3.0) * term2)
    total = -np.sum(dens) / (8.0 * np.pi**2)

    if tail_fraction is not None:
        r = np.linalg.norm(pts, axis=1)
        shell = r >= np.quantile(r, 0.9)  # outermost 10% of radial shells
        tail_abs = np.sum(np.abs(dens[shell])) / (8.0 * np.pi**2)
        total_abs = max(np.sum(np.abs(dens)) / (8.0 * np.pi**2), 1e-8)
        if tail_abs > tail_fraction * total_abs:
            raise TruncationError(
                f"integrand tail {tail_abs:.3e} exceeds {tail_fraction} of accumulated {total_abs:.3e}"
            )
    return float(total)


def _as_matrix_map(v_map, stencil: StencilConfig):
    """Normalize v_map to batched (matrices, d_matrices) callables."""
    if isinstance(v_map, GribovFactorMap):
        return v_map.matrices, v_map.d_matrices

    def matrices(pts):
        out = []
        for p in pts:
            m = v_map(p)
            out.append(np.asarray(getattr(m, "m", m)))
        return np.stack(out)

    offs, wts = stencil.offsets_weights()

    def d_matrices(pts):
        out = np.zeros((len(pts), 3, 2, 2), dtype=complex)
        for j in range(3):
            for o, w in zip(offs, wts):
                shifted = pts.copy()
                shifted[:, j] += o * stencil.h
                out[:, j] += w * matrices(shifted)
        return out

    return matrices, d_matrices


def gauge_transform(
    field: ColorAlgebraField, v_map, g: float, stencil: StencilConfig | None = None
) -> ColorAlgebraField:
    """Return the sampler of v (A_hat + d) v^-1 converted back to components."""
    stencil = stencil or StencilConfig(1e-4, 4)
    matrices, d_matrices = _as_matrix_map(v_map, stencil)

    def sample_batch(pts):
        v = matrices(pts)
        vd = v.conj().swapaxes(-1, -2)
        Ah = su2_matrix_from_components(field.sample(pts), g)
        dv = d_matrices(pts)
        # v d_i v^-1 = -(d_i v) v^-1
        L = -np.einsum("nibc,ncd->nibd", dv, vd)
        M = np.einsum("nab,nibc,ncd->niad", v, Ah, vd) + L
        return su2_components_from_matrix(M, g)

    return ColorAlgebraField(
        sample_batch,
        singular_origin=True,
        label=f"gauge transform of {field.label}",
    )


def surface_flux_term(
    field: ColorAlgebraField,
    v_map,
    g: float,
    r_sphere: float,
    n_theta: int = 48,
    n_phi: int = 48,
) -> float:
    """Flux form of the winding shift's total-derivative term, oriented so that

        X[v (A + d) v^-1] = X[A] + N[v] + surface_flux_term,

    i.e. -(1/8 pi^2) oint_{r=r_sphere} dS_i eps^{ijk} tr[ A_hat_j L_k ],
    with L_k = v d_k v^-1 taken from the map's exact derivative."""
    ct, wc = leggauss(n_theta)
    phi = 2.0 * np.pi * (np.arange(n_phi) + 0.5) / n_phi
    wp = 2.0 * np.pi / n_phi
    st = np.sqrt(np.maximum(0.0, 1.0 - ct**2))
    dirs = np.stack(
        [
            np.outer(st, np.cos(phi)),
            np.outer(st, np.sin(phi)),
            np.outer(ct, np.ones_like(phi)),
        ],
        axis=-1,
    ).reshape(-1, 3)
    wts = (wc[:, None] * wp * np.ones_like(phi)[None, :]).reshape(-1) * r_sphere**2
    pts = r_sphere * dirs
    matrices, d_matrices = _as_matrix_map(v_map, StencilConfig(1e-4, 4))
    v = matrices(pts)
    vd = v.conj().swapaxes(-1, -2)
    dv = d_matrices(pts)
    L = -np.einsum("nibc,ncd->nibd", dv, vd)
    Ah = su2_matrix_from_components(field.sample(pts), g)
    dens = np.einsum("ni,ijk,njab,nkba->n", dirs, EPS3, Ah, L).real
    return float(-np.sum(wts * dens) / (8.0 * np.pi**2))


def instanton_amplitude(n_out: int, n_in: int, g: float) -> float:
    """Semi-classical tunneling weight exp(-8 pi^2 (n_out - n_in)/g^2)."""
    if not (g > 0):
        raise DomainError("coupling g must be positive")
    return float(np.exp(-8.0 * np.pi**2 * (n_out - n_in) / g**2))
