"""Almost contact B-metric structures (phi, xi, eta, g) on a 3-dim frame.

Covers axiom checking, the associated metric g~, the structure tensor F
(both the F4 closed form and the one computed from a connection), and the
Lee forms.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateMetricError
from .tensor import (
    BASIS,
    NONDEGENERACY_TOL,
    PREDICATE_TOL,
    MetricTensor,
    as_matrix,
    as_vector,
    frozen,
    inner,
)


@dataclass(frozen=True, eq=False)
class AcbmStructure:
    """Frame components of phi (columns are phi(E_j)), xi, eta and g."""

    phi: np.ndarray
    xi: np.ndarray
    eta: np.ndarray
    g: MetricTensor

    def __post_init__(self):
        object.__setattr__(self, "phi", as_matrix(self.phi))
        object.__setattr__(self, "xi", as_vector(self.xi))
        object.__setattr__(self, "eta", as_vector(self.eta))

    def apply_phi(self, v) -> np.ndarray:
        return frozen(self.phi @ np.asarray(v, dtype=float))

    def eta_of(self, v) -> float:
        return float(self.eta @ np.asarray(v, dtype=float))


def model_structure() -> AcbmStructure:
    """The left-invariant structure on the Lie group model.

    phi E1 = E2, phi E2 = -E1, phi E3 = 0, xi = E3 and g = diag(1, -1, 1).
    """
    phi = np.array([[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 0.0]])
    return AcbmStructure(
        phi=phi,
        xi=(0.0, 0.0, 1.0),
        eta=(0.0, 0.0, 1.0),
        g=MetricTensor.diag(1.0, -1.0, 1.0),
    )


@dataclass(frozen=True)
class ValidationReport:
    residuals: dict[str, float]
    tol: float

    @property
    def passed(self) -> bool:
        return all(r < self.tol for r in self.residuals.values())

    def failures(self) -> list[str]:
        return [name for name, r in self.residuals.items() if not r < self.tol]


def validate_structure(S: AcbmStructure, tol: float = PREDICATE_TOL) -> ValidationReport:
    """Evaluates every structure axiom as a max-norm residual over the basis.

    Never raises on a bad structure; inspect ``report.passed``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    phi, xi, eta, gm = S.phi, S.xi, S.eta, S.g.m
    phi2 = phi @ phi
    # columns of (phi^2 + I - xi eta) are the residual vectors on each E_j
    phi_squared = np.abs(phi2 + np.eye(3) - np.outer(xi, eta)).max()
    b_metric = np.abs(phi.T @ gm @ phi + gm - np.outer(eta, eta)).max()
    res = {
        "phi_squared": float(phi_squared),
        "eta_xi": abs(float(eta @ xi) - 1.0),
        "b_metric": float(b_metric),
        "eta_phi": float(np.abs(eta @ phi).max()),
        "phi_xi": float(np.abs(phi @ xi).max()),
        "eta_is_g_xi": float(np.abs(gm @ xi - eta).max()),
        "g_xi_xi": abs(float(xi @ gm @ xi) - 1.0),
    }
    return ValidationReport(res, tol)


def assoc_metric(S: AcbmStructure) -> MetricTensor:
    """The associated B-metric g~(X, Y) = g(X, phi Y) + eta(X) eta(Y)."""
    m = S.g.m @ S.phi + np.outer(S.eta, S.eta)
    if abs(np.linalg.det(m)) <= NONDEGENERACY_TOL:
        raise DegenerateMetricError("associated metric is degenerate; the input structure is invalid")
    return MetricTensor(m)


def f4_tensor(S: AcbmStructure, theta_xi: float, X, Y, Z) -> float:
    """F(X,Y,Z) for an F4 structure with Lee form value theta(xi)."""
    pX, pY, pZ = S.apply_phi(X), S.apply_phi(Y), S.apply_phi(Z)
    return -0.5 * theta_xi * (inner(S.g, pX, pY) * S.eta_of(Z) + inner(S.g, pX, pZ) * S.eta_of(Y))


def f4_table(S: AcbmStructure, theta_xi: float) -> FTensorTable:
    f = np.zeros((3, 3, 3))
    for i, j, k in itertools.product(range(3), repeat=3):
        f[i, j, k] = f4_tensor(S, theta_xi, BASIS[i], BASIS[j], BASIS[k])
    return FTensorTable(f)


@dataclass(frozen=True, eq=False)
class FTensorTable:
    """Components F_ijk = F(E_i, E_j, E_k) of the structure tensor.

    Indices are 0-based in ``f``; ``nonzero()`` reports them 1-based.
    """

    f: np.ndarray
    symmetry_tol: float = field(default=1e-9, repr=False)

    def __post_init__(self):
        f = np.asarray(self.f, dtype=float)
        if f.shape != (3, 3, 3):
            raise ValueError("F table must have shape (3, 3, 3)")
        asym = np.abs(f - f.transpose(0, 2, 1)).max()
        if asym > self.symmetry_tol:
            raise ValueError(f"F table violates F(X,Y,Z) = F(X,Z,Y): residual {asym:.3e}")
        object.__setattr__(self, "f", frozen(f))

    def __call__(self, X, Y, Z) -> float:
        return float(np.einsum("ijk,i,j,k->", self.f, X, Y, Z))

    def nonzero(self, tol: float = 0.0) -> dict[str, float]:
        return {
            f"F{i + 1}{j + 1}{k + 1}": float(self.f[i, j, k])
            for i, j, k in itertools.product(range(3), repeat=3)
            if abs(self.f[i, j, k]) > tol
        }

    def is_zero(self, tol: float = 0.0) -> bool:
        return bool(np.abs(self.f).max() <= tol)


def f_table_from_nabla(connection, S: AcbmStructure) -> FTensorTable:
    """F_ijk = g((nabla_{E_i} phi) E_j, E_k) from a connection table.

    ``connection[i, j]`` holds the components of nabla_{E_i} E_j.
    """
    conn = np.asarray(connection, dtype=float)
    f = np.zeros((3, 3, 3))
    for i, j in itertools.product(range(3), repeat=2):
        phi_ej = S.phi[:, j]
        nabla_phi_ej = phi_ej @ conn[i]  # nabla_{E_i}(phi E_j), constant coefficients
        dphi = nabla_phi_ej - S.phi @ conn[i, j]
        f[i, j, :] = S.g.m @ dphi
    return FTensorTable(f)


@dataclass(frozen=True)
class LeeForms:
    theta: np.ndarray
    theta_star: np.ndarray
    omega: np.ndarray

    def theta_xi(self, S: AcbmStructure) -> float:
        return float(self.theta @ S.xi)


def lee_forms(F: FTensorTable, S: AcbmStructure) -> LeeForms:
    """The three metric traces of F, as covector components."""
    ginv = np.linalg.inv(S.g.m)
    theta = np.einsum("ij,ijk->k", ginv, F.f)
    # F(E_i, phi E_j, X) = sum_l phi[l, j] F_ilk
    f_phi = np.einsum("lj,ilk->ijk", S.phi, F.f)
    theta_star = np.einsum("ij,ijk->k", ginv, f_phi)
    omega = np.einsum("i,j,ijk->k", S.xi, S.xi, F.f)
    return LeeForms(frozen(theta), frozen(theta_star), frozen(omega))


def contact_restriction(m, S: AcbmStructure) -> np.ndarray:
    """2x2 Gram matrix of a bilinear form on a basis of ker(eta).

    The basis is picked from the frame vectors projected off xi, which is
    enough for structures where xi is a frame vector up to scale.
    """
    m = np.asarray(m, dtype=float)
    projected = [e - S.eta_of(e) * S.xi for e in BASIS]
    # pick the two projections spanning the largest area
    best = max(
        itertools.combinations(projected, 2),
        key=lambda pair: np.linalg.norm(np.cross(pair[0], pair[1])),
    )
    B = np.column_stack(best)
    return frozen(B.T @ m @ B)
