"""Radial potentials, Euler/radial residuals and the background operator."""
import numpy as np
import pytest

from ymvac.bps_profiles import f1_bps
from ymvac.errors import DomainError
from ymvac.greens import (
    EulerSolution,
    euler_residual,
    golden_roots,
    golden_solution,
    green_tensor,
    monopole_covariant_laplacian,
    radial_ym_residual,
    shoot_radial,
)

GOLD = (1.0 + np.sqrt(5.0)) / 2.0


class TestRoots:
    def test_coulomb_pair(self):
        assert golden_roots(0) == (-1.0, 0.0)

    def test_golden_pair(self):
        l1, l2 = golden_roots(1)
        assert l1 == pytest.approx(-(1.0 + np.sqrt(5.0)) / 2.0, abs=1e-14)
        assert l2 == pytest.approx((-1.0 + np.sqrt(5.0)) / 2.0, abs=1e-14)
        assert l1 == pytest.approx(-1.618, abs=5e-4)
        assert l2 == pytest.approx(0.618, abs=5e-4)

    def test_integer_pair(self):
        assert golden_roots(2) == (-2.0, 1.0)

    def test_vieta(self):
        for n in range(0, 6):
            sol = golden_solution(n, 1.0, 1.0)
            dsum, dprod = sol.vieta_defect()
            assert dsum < 1e-14 and dprod < 1e-13
            assert sol.l1 < 0 < sol.l2 + 1

    def test_golden_section_identity(self):
        _, l2 = golden_roots(1)
        assert abs(l2**2 - (1.0 - l2)) < 1e-14

    def test_domain(self):
        with pytest.raises(DomainError):
            golden_roots(-1)


class TestEulerResidual:
    def test_coulomb_solution(self):
        sol = golden_solution(0, -1.0 / (4.0 * np.pi), 0.0)
        assert abs(euler_residual(sol, 1.0)) < 1e-14

    def test_golden_solution(self):
        sol = golden_solution(1, 1.0, 1.0)
        assert abs(euler_residual(sol, 2.5)) < 1e-14

    def test_random_coefficients(self):
        rng = np.random.default_rng(1)
        for n in (0, 1, 2):
            for _ in range(20):
                d, c = rng.normal(size=2)
                sol = golden_solution(n, d, c)
                z = rng.uniform(0.25, 4.0)
                assert abs(euler_residual(sol, z)) < 1e-12

    def test_perturbed_exponent(self):
        good = golden_solution(1, 1.0, 1.0)
        bad = EulerSolution(n=1, d=1.0, c=1.0, l1=good.l1, l2=good.l2 + 0.01)
        assert abs(euler_residual(bad, 2.5)) > 1e-4

    def test_domain(self):
        with pytest.raises(DomainError):
            euler_residual(golden_solution(0, 1.0, 0.0), 0.0)


class TestRadialYM:
    def test_fixed_points_exact(self):
        for f in (0.0, 1.0, -1.0):
            for r in (0.3, 1.0, 7.0):
                assert radial_ym_residual(lambda _: f, r) == 0.0

    def test_smooth_profile_residual_decays_with_eps(self):
        # the smooth pair solves the first-order system, not this second-order
        # equation: nonzero residual, decaying as the core shrinks at fixed r
        # (exponential decay sets in once r/eps is past the core transition)
        res = [abs(radial_ym_residual(lambda r, e=e: f1_bps(r, e), 1.0)) for e in (0.125, 0.0625, 0.03125)]
        assert res[0] > res[1] > res[2]
        assert res[0] > 1e-2
        assert res[1] < 1e-3

    def test_domain(self):
        with pytest.raises(DomainError):
            radial_ym_residual(lambda r: 0.0, 0.0)


class TestShooting:
    def test_fixed_points_stay(self):
        for f0, name in ((1.0, "fixed:+1"), (0.0, "fixed:0"), (-1.0, "fixed:-1")):
            t = shoot_radial(f0, 0.0, (1.0, 100.0))
            assert t.classification == name
            assert abs(t.f[-1] - f0) < 1e-8

    def test_classification_stable_under_tolerance(self):
        a = shoot_radial(0.999, 0.0, (1.0, 100.0), rtol=1e-10)
        b = shoot_radial(0.999, 0.0, (1.0, 100.0), rtol=1e-12)
        assert a.classification == b.classification

    def test_independent_integrator_oracle(self):
        a = shoot_radial(0.97, 0.05, (1.0, 60.0), method="RK45")
        b = shoot_radial(0.97, 0.05, (1.0, 60.0), method="DOP853")
        assert a.classification == b.classification
        assert abs(a.f[-1] - b.f[-1]) < 1e-6

    def test_blowup_is_classified(self):
        # growing trajectory crossing a finite escape threshold: a valid outcome
        t = shoot_radial(0.0, 3.0, (1.0, 400.0), blowup=5.0)
        assert t.classification == "divergent" and t.diverged

    def test_domain(self):
        with pytest.raises(DomainError):
            shoot_radial(1.0, 0.0, (0.0, 10.0))
        with pytest.raises(DomainError):
            shoot_radial(np.inf, 0.0, (1.0, 10.0))


class TestGreenTensor:
    def setup_method(self):
        self.s0 = golden_solution(0, -1.0 / (4.0 * np.pi), 0.0)
        self.s1 = golden_solution(1, 1.0 / (4.0 * np.pi), 1.0)
        self.G = green_tensor(self.s0, self.s1)

    def test_requires_correct_indices(self):
        with pytest.raises(DomainError):
            green_tensor(self.s1, self.s1)

    def test_colinear_projector_identity(self):
        x = np.array([0.0, 0.0, 2.0])
        y = np.array([0.0, 0.0, 0.5])
        z = np.linalg.norm(x - y)
        n = np.array([0.0, 0.0, 1.0])
        expected = np.outer(n, n) * self.s0.value(z) + (np.eye(3) - np.outer(n, n)) * self.s1.value(z)
        np.testing.assert_allclose(self.G.evaluate(x, y), expected, atol=1e-14)

    def test_projector_completeness_when_potentials_match(self):
        # scale the transverse potential to coincide with V0 at the probe
        # separation: G collapses to delta^{ab} V0(z) for colinear points
        x = np.array([0.0, 0.0, 3.0])
        y = np.array([0.0, 0.0, 1.0])
        z = np.linalg.norm(x - y)
        s1 = golden_solution(1, 0.0, self.s0.value(z) / z**golden_roots(1)[1])
        Gsame = green_tensor(self.s0, s1)
        np.testing.assert_allclose(Gsame.evaluate(x, y), np.eye(3) * self.s0.value(z), atol=1e-14)

    def test_swap_symmetry(self):
        rng = np.random.default_rng(3)
        for _ in range(5):
            x, y = rng.normal(size=3), rng.normal(size=3)
            np.testing.assert_allclose(self.G.evaluate(x, y), self.G.evaluate(y, x).T, atol=1e-13)

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            self.G.evaluate(np.zeros(3), np.array([1.0, 0, 0]))
        with pytest.raises(DomainError):
            self.G.evaluate(np.array([1.0, 0, 0]), np.array([1.0, 0, 0]))


class TestBackgroundOperator:
    """The operator is exact on the assembled tensor in the center-anchored
    colinear configuration (source next to the monopole center)."""

    def setup_method(self):
        self.s0 = golden_solution(0, -1.0 / (4.0 * np.pi), 0.0)
        self.s1 = golden_solution(1, 1.0, 1.0)
        self.G = green_tensor(self.s0, self.s1)
        self.y = np.array([0.0, 0.0, 1e-9])

    def _residual(self, x, h, order=2):
        worst = 0.0
        for b in range(3):
            res = monopole_covariant_laplacian(
                lambda xx, b=b: self.G.evaluate(xx, self.y)[:, b], x, h=h, order=order
            )
            worst = max(worst, float(np.abs(res).max()))
        return worst

    def test_annihilation_colinear(self):
        for r in (0.8, 2.0, 5.0):
            x = np.array([0.0, 0.0, r])
            z = np.linalg.norm(x - self.y)
            assert self._residual(x, z / 500.0) < 1e-3

    def test_h_refinement_second_order(self):
        x = np.array([0.0, 0.0, 2.0])
        z = np.linalg.norm(x - self.y)
        r1 = self._residual(x, z / 250.0)
        r2 = self._residual(x, z / 500.0)
        r3 = self._residual(x, z / 1000.0)
        assert r1 > r2 > r3
        assert r1 / r2 > 3.0  # consistent with O(h^2)

    def test_coulomb_reduction(self):
        # the n=0 sector alone is the fundamental harmonic kernel -1/(4 pi z),
        # annihilated for a generic (non-colinear) source
        y = np.array([0.4, -0.3, 0.2])

        def coulomb(xx):
            z = np.linalg.norm(np.asarray(xx) - y)
            return self.s0.value(z)

        x = np.array([1.5, 0.7, -0.9])
        h = 1e-3
        lap = 0.0
        for j in range(3):
            e = np.zeros(3)
            e[j] = h
            lap += (coulomb(x + e) - 2.0 * coulomb(x) + coulomb(x - e)) / h**2
        assert abs(lap) < 1e-6
        assert coulomb(x) == pytest.approx(-1.0 / (4.0 * np.pi * np.linalg.norm(x - y)), rel=1e-12)

    def test_radial_sector_annihilated_for_generic_source(self):
        # columns proportional to n(x) V0(z) are harmonic for any source point
        y = np.array([0.0, 0.0, 0.7])
        x = np.array([0.0, 0.0, 2.0])
        z = np.linalg.norm(x - y)
        res = monopole_covariant_laplacian(
            lambda xx: self.G.evaluate(xx, y)[:, 2], x, h=z / 500.0
        )
        assert np.abs(res).max() < 1e-6
