"""Green-function structure of the hedgehog monopole background.

The color-tensor Green function is decomposed over the radial frame,

    G^{ab}(x, y) = n^a(x) n^b(y) V0(z)
                   + [ (n(x).n(y)) d^{ab} - n^a(y) n^b(x) ] V1(z),
    z = |x - y|,

where the transverse structure is the frame contraction
sum_c (c x n(x))^a (c x n(y))^b over a color basis c; it collapses to the
transverse projector 1 - n n^T for colinear points, and its columns are
exactly the structures the background operator annihilates (the projector
contraction P(x) P(y) is not: the operator's homogeneous transverse
solutions are (c x n_hat) V1, not P c V1).  Each radial potential solves
the Euler equation

    V'' + (2/z) V' - (n/z^2) V = 0,   V_n(z) = d_n z^{l1} + c_n z^{l2},

with exponents the roots of l^2 + l = n.  n = 0 reproduces the Coulomb pair
(-1, 0); n = 1 gives the golden-section pair (-(1+sqrt5)/2, (sqrt5-1)/2).

The hedgehog covariant Laplacian acting on a color vector S, expanded over
the f = +1 background, is

    (D^2 S)^a = Lap S^a - (n^a n^b + d^{ab}) S_b / r^2
                + (2/r)(n^a d^b - n^b d^a) S_b,

implemented by central differences in monopole_covariant_laplacian; it
annihilates the assembled tensor at colinear configurations.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.integrate import solve_ivp

from .errors import DomainError

__all__ = [
    "EulerSolution",
    "GreenTensor",
    "golden_roots",
    "golden_solution",
    "euler_residual",
    "radial_ym_residual",
    "shoot_radial",
    "RadialTrajectory",
    "green_tensor",
    "monopole_covariant_laplacian",
]


def golden_roots(n: int) -> tuple[float, float]:
    """Roots (l1 <= l2) of l^2 + l = n in closed form."""
    disc = 1.0 + 4.0 * n
    if disc < 0:
        raise DomainError(f"no real exponents for index n={n}")
    s = np.sqrt(disc)
    return (-(1.0 + s) / 2.0, (-1.0 + s) / 2.0)


@dataclass(frozen=True)
class EulerSolution:
    """Power pair V(z) = d z^l1 + c z^l2 for the index-n Euler equation.

    Exponents are stored explicitly so perturbed (non-solution) pairs can be
    represented for negative controls; build exact ones with golden_solution.
    """

    n: int
    d: float
    c: float
    l1: float
    l2: float

    def value(self, z):
        z = np.asarray(z, dtype=float)
        if np.any(z <= 0):
            raise DomainError("separation z must be positive")
        out = self.d * z**self.l1 + self.c * z**self.l2
        return out if out.ndim else float(out)

    def vieta_defect(self) -> tuple[float, float]:
        return (abs(self.l1 + self.l2 + 1.0), abs(self.l1 * self.l2 + self.n))


def golden_solution(n: int, d: float, c: float) -> EulerSolution:
    l1, l2 = golden_roots(n)
    return EulerSolution(n=n, d=d, c=c, l1=l1, l2=l2)


def euler_residual(sol: EulerSolution, z: float) -> float:
    """Residual of V'' + (2/z)V' - (n/z^2)V, term-by-term analytic derivatives."""
    if not (z > 0):
        raise DomainError("separation z must be positive")
    r1 = sol.l1 * (sol.l1 - 1.0) + 2.0 * sol.l1 - sol.n
    r2 = sol.l2 * (sol.l2 - 1.0) + 2.0 * sol.l2 - sol.n
    return float(sol.d * r1 * z ** (sol.l1 - 2.0) + sol.c * r2 * z ** (sol.l2 - 2.0))


def radial_ym_residual(f: Callable, r: float, h: float | None = None) -> float:
    """Residual of f'' + f(f^2 - 1)/r^2 for a radial profile f(r).

    f'' by a 4th-order central stencil with step h (default r/500); exact for
    the constant fixed points f = 0, +1, -1.
    """
    if not (r > 0):
        raise DomainError("radius must be positive")
    h = h or r / 500.0
    fm2, fm1, f0, fp1, fp2 = (f(r - 2 * h), f(r - h), f(r), f(r + h), f(r + 2 * h))
    fpp = (-fm2 + 16 * fm1 - 30 * f0 + 16 * fp1 - fp2) / (12.0 * h * h)
    return float(fpp + f0 * (f0 * f0 - 1.0) / (r * r))


@dataclass(frozen=True)
class RadialTrajectory:
    r: np.ndarray
    f: np.ndarray
    fp: np.ndarray
    classification: str  # 'fixed:0' | 'fixed:+1' | 'fixed:-1' | 'divergent' | 'undecided'
    diverged: bool


def shoot_radial(
    f0: float,
    f0_slope: float,
    r_span: tuple[float, float],
    rtol: float = 1e-10,
    atol: float = 1e-12,
    method: str = "RK45",
    blowup: float = 1e6,
) -> RadialTrajectory:
    """Integrate f'' = f(1 - f^2)/r^2 and classify the terminal behaviour.

    Blow-up (|f| > 1e6) is a valid classification outcome, not a failure.
    """
    r0, r1 = r_span
    if not (0 < r0 < r1):
        raise DomainError("r_span must satisfy 0 < r0 < r1")
    if not (np.isfinite(f0) and np.isfinite(f0_slope)):
        raise DomainError("initial data must be finite")

    def rhs(r, y):
        return [y[1], y[0] * (1.0 - y[0] ** 2) / (r * r)]

    def blow(r, y):
        return abs(y[0]) - blowup

    blow.terminal = True

    sol = solve_ivp(
        rhs, (r0, r1), [f0, f0_slope], method=method, rtol=rtol, atol=atol,
        events=blow, dense_output=False,
    )
    diverged = len(sol.t_events[0]) > 0
    f_end = sol.y[0, -1]
    if diverged:
        cls = "divergent"
    else:
        cls = "undecided"
        for target, name in ((0.0, "fixed:0"), (1.0, "fixed:+1"), (-1.0, "fixed:-1")):
            if abs(f_end - target) < 0.05:
                cls = f"{name}"
                break
    return RadialTrajectory(r=sol.t, f=sol.y[0], fp=sol.y[1], classification=cls, diverged=diverged)


# ---------------------------------------------------------------------------
# assembled tensor and the background operator
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GreenTensor:
    """Color 3x3 tensor sampler built from the radial potentials."""

    sol0: EulerSolution
    sol1: EulerSolution

    def __post_init__(self):
        if self.sol0.n != 0 or self.sol1.n != 1:
            raise DomainError("green_tensor needs the n=0 and n=1 radial solutions")

    def evaluate(self, x, y) -> np.ndarray:
        x = np.asarray(getattr(x, "x", x), dtype=float)
        y = np.asarray(getattr(y, "x", y), dtype=float)
        rx, ry = np.linalg.norm(x), np.linalg.norm(y)
        if rx == 0 or ry == 0:
            raise DomainError("tensor undefined at the origin")
        z = float(np.linalg.norm(x - y))
        if z == 0:
            raise DomainError("coincident points")
        nx, ny = x / rx, y / ry
        transverse = float(nx @ ny) * np.eye(3) - np.outer(ny, nx)
        return np.outer(nx, ny) * self.sol0.value(z) + transverse * self.sol1.value(z)


def green_tensor(sol0: EulerSolution, sol1: EulerSolution) -> GreenTensor:
    return GreenTensor(sol0, sol1)


def monopole_covariant_laplacian(S: Callable, x, h: float, order: int = 2) -> np.ndarray:
    """Apply the f = +1 background operator to a color-vector field S(x) -> (3,)
    by central differences in x.

    Lap S^a - (n^a n^b + d^{ab}) S_b/r^2 + (2/r)(n^a d_b S^b - n^b d_a S^b).
    """
    x = np.asarray(getattr(x, "x", x), dtype=float)
    r = float(np.linalg.norm(x))
    if r == 0:
        raise DomainError("operator singular at the origin")
    n = x / r
    if order == 2:
        offs = np.array([-1.0, 1.0])
        w1 = np.array([-0.5, 0.5]) / h
        w2 = np.array([1.0, -2.0, 1.0]) / (h * h)  # with center
    elif order == 4:
        offs = np.array([-2.0, -1.0, 1.0, 2.0])
        w1 = np.array([1.0, -8.0, 8.0, -1.0]) / (12.0 * h)
        w2 = np.array([-1.0, 16.0, -30.0, 16.0, -1.0]) / (12.0 * h * h)
    else:
        raise DomainError("order must be 2 or 4")

    S0 = np.asarray(S(x), dtype=float)
    grad = np.zeros((3, 3))  # grad[j][a] = d_j S^a
    lap = np.zeros(3)
    for j in range(3):
        e = np.zeros(3)
        e[j] = h
        vals = [np.asarray(S(x + o * e), dtype=float) for o in offs]
        grad[j] = sum(w * v for w, v in zip(w1, vals))
        if order == 2:
            lap += w2[0] * vals[0] + w2[1] * S0 + w2[2] * vals[1]
        else:
            lap += (
                w2[0] * vals[0] + w2[1] * vals[1] + w2[2] * S0
                + w2[3] * vals[2] + w2[4] * vals[3]
            )
    div = np.trace(grad)
    nb_da_Sb = grad @ n  # [a] = n^b d_a S^b
    out = lap - (n * (n @ S0) + S0) / (r * r) + (2.0 / r) * (n * div - nb_da_Sb)
    return out
