"""Adjoint matrix representation of the Lie group model.

ad_X is A = x1 M1 + x2 M2 + x3 M3; its exponential is Ad(e^X). For x3 != 0
the exponential is a planar rotation by alpha x3 with a translation-like
third column; for x3 = 0, A^2 = 0 and e^A = I + A exactly.
"""

from __future__ import annotations

import math

import numpy as np

from .lie_model import LieModel
from .null_frenet import NullFrenetFrame, SlantParams, build_tangent
from .tensor import BASIS, as_vector, frozen


def ad_matrices(alpha: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Matrices of ad_{E_i} in the basis {E1, E2, E3}; column j is [E_i, E_j]."""
    model = LieModel(alpha)
    return tuple(
        frozen(np.column_stack([model.bracket(Ei, Ej) for Ej in BASIS])) for Ei in BASIS
    )


def ad_of(X, alpha: float) -> np.ndarray:
    x1, x2, x3 = as_vector(X)
    A = np.array([
        [0.0, x3 * alpha, -x2 * alpha],
        [-x3 * alpha, 0.0, x1 * alpha],
        [0.0, 0.0, 0.0],
    ])
    return frozen(A + 0.0)  # + 0.0 clears signed zeros


def exp_closed(X, alpha: float) -> np.ndarray:
    """Closed-form e^{ad_X}."""
    x1, x2, x3 = as_vector(X)
    if x3 == 0:
        return frozen(np.eye(3) + ad_of(X, alpha))
    angle = alpha * x3
    c, s = math.cos(angle), math.sin(angle)
    # 1 - cos loses everything for small angles; use 2 sin^2(angle/2)
    one_minus_c = 2.0 * math.sin(angle / 2.0) ** 2
    return frozen([
        [c, s, (x1 * one_minus_c - x2 * s) / x3],
        [-s, c, (x2 * one_minus_c + x1 * s) / x3],
        [0.0, 0.0, 1.0],
    ])


def adjoint_curve(p: SlantParams, alpha: float, t: float) -> np.ndarray:
    """Ad(C(t)) for the curve C(t) = exp(t C'), i.e. exp_closed(t (p, q, a))."""
    return exp_closed(t * build_tangent(p), alpha)


def group_residuals(M) -> dict[str, float]:
    """How far M is from the form Ad(e^X) must take."""
    M = np.asarray(M, dtype=float)
    R = M[:2, :2]
    return {
        "det": abs(float(np.linalg.det(M)) - 1.0),
        "bottom_row": float(np.abs(M[2] - (0.0, 0.0, 1.0)).max()),
        "rotation_orthogonality": float(np.abs(R.T @ R - np.eye(2)).max()),
        "rotation_det": abs(float(np.linalg.det(R)) - 1.0),
    }


def frame_matrices(frame: NullFrenetFrame, alpha: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """ad matrices of the tangent, W1 and N1."""
    return ad_of(frame.tangent, alpha), ad_of(frame.W, alpha), ad_of(frame.N, alpha)


def char_poly_coeffs(A) -> np.ndarray:
    """(c2, c1, c0) with det(lambda I - A) = lambda^3 + c2 lambda^2 + c1 lambda + c0."""
    A = np.asarray(A, dtype=float)
    tr = np.trace(A)
    tr2 = np.trace(A @ A)
    return frozen([-tr, (tr * tr - tr2) / 2.0, -np.linalg.det(A)])


def char_poly_residual(X, alpha: float) -> float:
    """Distance of ad_X's characteristic polynomial from lambda (lambda^2 + x3^2 alpha^2).

    Comparing coefficients keeps everything real; the eigenvalues
    0, +-i x3 alpha are the roots of that polynomial.
    """
    x3 = as_vector(X)[2]
    expected = np.array([0.0, (x3 * alpha) ** 2, 0.0])
    return float(np.abs(char_poly_coeffs(ad_of(X, alpha)) - expected).max())
