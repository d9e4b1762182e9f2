import math

import numpy as np
import pytest
import scipy.linalg

from bmfrenet.lie_model import LieModel
from bmfrenet.matrix_repr import (
    ad_matrices,
    ad_of,
    adjoint_curve,
    char_poly_coeffs,
    char_poly_residual,
    exp_closed,
    frame_matrices,
    group_residuals,
)
from bmfrenet.null_frenet import SlantParams, build_tangent, unique_frame_f1
from bmfrenet.tensor import BASIS, exp_series


@pytest.fixture(scope="module")
def sample():
    rng = np.random.default_rng(20240601)
    return [(rng.uniform(-3, 3, 3), rng.uniform(-3, 3)) for _ in range(200)]


class TestAdMatrices:
    def test_m3(self):
        np.testing.assert_array_equal(ad_matrices(1.0)[2], [[0, 1, 0], [-1, 0, 0], [0, 0, 0]])

    def test_m1_single_entry(self):
        M1 = ad_matrices(0.7)[0]
        assert M1[1, 2] == 0.7
        assert np.count_nonzero(M1) == 1

    def test_columns_are_brackets(self):
        m = LieModel(-1.3)
        for Mi, Ei in zip(ad_matrices(m.alpha), BASIS):
            for j, Ej in enumerate(BASIS):
                np.testing.assert_array_equal(Mi[:, j], m.bracket(Ei, Ej))

    def test_ad_of_is_linear_combination(self):
        X = np.array([0.4, -1.1, 2.5])
        M = ad_matrices(1.7)
        np.testing.assert_allclose(ad_of(X, 1.7), sum(x * Mi for x, Mi in zip(X, M)), atol=1e-15)


class TestAdOf:
    def test_example(self):
        np.testing.assert_array_equal(ad_of((0, 0, 1), 2.0), [[0, 2, 0], [-2, 0, 0], [0, 0, 0]])

    def test_zero(self):
        np.testing.assert_array_equal(ad_of((0, 0, 0), 3.0), np.zeros((3, 3)))

    def test_action_is_bracket(self, sample):
        for X, alpha in sample[:50]:
            m = LieModel(alpha)
            A = ad_of(X, alpha)
            for Ej in BASIS:
                np.testing.assert_allclose(A @ Ej, m.bracket(X, Ej), atol=1e-14)


class TestExpClosed:
    def test_rotation_by_pi(self):
        M = exp_closed((0, 0, math.pi), 1.0)
        np.testing.assert_allclose(M, [[-1, 0, 0], [0, -1, 0], [0, 0, 1]], atol=1e-15)

    def test_identity(self):
        np.testing.assert_array_equal(exp_closed((0, 0, 0), 1.0), np.eye(3))

    def test_matches_series(self, sample):
        worst = max(
            np.abs(exp_closed(X, alpha) - exp_series(ad_of(X, alpha))).max() for X, alpha in sample
        )
        assert worst < 1e-12

    def test_matches_series_on_x3_band(self):
        rng = np.random.default_rng(8)
        for _ in range(100):
            X = np.array([*rng.uniform(-3, 3, 2), rng.uniform(0.1, 3)])
            alpha = rng.uniform(-3, 3)
            np.testing.assert_allclose(exp_closed(X, alpha), exp_series(ad_of(X, alpha)), atol=1e-12)

    def test_matches_pade(self, sample):
        for X, alpha in sample[:40]:
            np.testing.assert_allclose(exp_closed(X, alpha), scipy.linalg.expm(ad_of(X, alpha)), atol=1e-12)

    def test_nilpotent_branch(self):
        X = np.array([1.5, -2.0, 0.0])
        A = ad_of(X, 1.2)
        np.testing.assert_array_equal(A @ A, np.zeros((3, 3)))
        np.testing.assert_array_equal(exp_closed(X, 1.2), np.eye(3) + A)

    def test_seam_continuity(self):
        for x1, x2, alpha in [(1.0, 2.0, 1.0), (-3.0, 0.5, -2.5), (2.0, -2.0, 3.0)]:
            near = exp_closed((x1, x2, 1e-8), alpha)
            at = exp_closed((x1, x2, 0.0), alpha)
            assert np.abs(near - at).max() < 1e-6

    def test_small_angle_accuracy(self):
        # at x3 = 1e-8 the series is exact to rounding, so the closed form must be too
        X = np.array([1.0, 2.0, 1e-8])
        np.testing.assert_allclose(exp_closed(X, 1.0), exp_series(ad_of(X, 1.0)), atol=1e-15)

    def test_large_angle(self):
        X = np.array([0.5, -0.5, 1e4])
        res = group_residuals(exp_closed(X, 3.0))
        assert max(res.values()) < 1e-12

    def test_group_invariants(self, sample):
        for X, alpha in sample:
            assert max(group_residuals(exp_closed(X, alpha)).values()) < 1e-12

    def test_group_residuals_detect_violation(self):
        res = group_residuals(np.diag([2.0, 1.0, 1.0]))
        assert res["det"] == 1.0 and res["rotation_orthogonality"] == 3.0


class TestCharacteristicPolynomial:
    def test_coefficients(self, sample):
        for X, alpha in sample:
            assert char_poly_residual(X, alpha) < 1e-10

    def test_against_numpy_poly(self):
        A = ad_of((0.3, 1.0, -2.0), 1.5)
        np.testing.assert_allclose(char_poly_coeffs(A), np.poly(A)[1:], atol=1e-12)

    def test_eigenvalues_are_roots(self, sample):
        for X, alpha in sample:
            lam = np.linalg.eigvals(ad_of(X, alpha))
            value = -lam * (lam**2 + (X[2] * alpha) ** 2)
            assert np.abs(value).max() < 1e-10


class TestAdjointCurve:
    def test_starts_at_identity(self):
        np.testing.assert_array_equal(adjoint_curve(SlantParams(1.0, 2.0), 1.0, 0.0), np.eye(3))

    def test_example_at_pi(self):
        M = adjoint_curve(SlantParams(1.0, 0.0), 1.0, math.pi)
        np.testing.assert_allclose(M, [[-1, 0, 0], [0, -1, 2], [0, 0, 1]], atol=1e-15)
        np.testing.assert_allclose(M, exp_series(ad_of(math.pi * build_tangent(SlantParams(1.0, 0.0)), 1.0)), atol=1e-12)

    def test_one_parameter_subgroup(self):
        rng = np.random.default_rng(31)
        for _ in range(50):
            a, b = rng.uniform(-2, 2, 2)
            p, alpha = SlantParams(a, b), rng.uniform(-2, 2)
            t, s = rng.uniform(-3, 3, 2)
            lhs = adjoint_curve(p, alpha, t + s)
            rhs = adjoint_curve(p, alpha, t) @ adjoint_curve(p, alpha, s)
            assert np.abs(lhs - rhs).max() < 1e-11

    def test_legendre_is_nilpotent(self):
        p = SlantParams(0.0, 2.0)
        M = adjoint_curve(p, 1.0, 1.5)
        np.testing.assert_array_equal(M, np.eye(3) + ad_of(1.5 * build_tangent(p), 1.0))


class TestFrameMatrices:
    def test_tangent_example(self):
        f = unique_frame_f1(SlantParams(1.0, 0.0), LieModel(1.0))
        A_t, _, _ = frame_matrices(f, 1.0)
        # tangent (0, 1, 1): [C, E3] = -alpha E1, so the third column is (-1, 0, 0)
        np.testing.assert_array_equal(A_t, [[0, 1, -1], [-1, 0, 0], [0, 0, 0]])
        m = LieModel(1.0)
        for j, Ej in enumerate(BASIS):
            np.testing.assert_array_equal(A_t[:, j], m.bracket(f.tangent, Ej))

    def test_legendre_w1(self):
        for b in (2.0, -2.0):
            f = unique_frame_f1(SlantParams(0.0, b), LieModel(1.0))
            _, A_w, _ = frame_matrices(f, 1.0)
            np.testing.assert_allclose(A_w, ad_of((0, 0, -math.copysign(1.0, b)), 1.0), atol=1e-15)

    def test_n1_scale(self):
        p = SlantParams(1.0, 2.0)
        f = unique_frame_f1(p, LieModel(2.0))
        _, _, A_n = frame_matrices(f, 2.0)
        assert A_n[0, 1] == pytest.approx(2.0 * p.a**3 / (2 * p.disc), abs=1e-15)
