"""The three-dimensional Lie group F4-manifold.

The Lie algebra has brackets [E1, E3] = alpha E2, [E2, E3] = -alpha E1,
[E1, E2] = 0 and carries the left-invariant structure of
:func:`bmfrenet.structure.model_structure`. The Levi-Civita connection is
obtained by solving the Koszul system, not hard-coded.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable

import numpy as np

from .errors import DegenerateMetricError
from .structure import AcbmStructure, assoc_metric, model_structure
from .tensor import BASIS, NONDEGENERACY_TOL, MetricTensor, as_vector, frozen, inner


@dataclass(frozen=True)
class CurveVectorField:
    """Vector field along a curve with frame coefficients v^i(t).

    ``dcoeffs`` must be the exact derivative of ``coeffs``; finite
    differences only appear in :meth:`consistency_residual`.
    """

    coeffs: Callable[[float], np.ndarray]
    dcoeffs: Callable[[float], np.ndarray]

    @classmethod
    def constant(cls, v) -> CurveVectorField:
        v = as_vector(v)
        zero = frozen(np.zeros(3))
        return cls(lambda t: v, lambda t: zero)

    def __call__(self, t: float) -> np.ndarray:
        return as_vector(self.coeffs(t))

    def consistency_residual(self, t_samples, step: float = 1e-5) -> float:
        worst = 0.0
        for t in t_samples:
            fd = (np.asarray(self.coeffs(t + step)) - np.asarray(self.coeffs(t - step))) / (2 * step)
            worst = max(worst, float(np.abs(fd - np.asarray(self.dcoeffs(t))).max()))
        return worst

    def is_consistent(self, t_samples, step: float = 1e-5, tol: float = 1e-6) -> bool:
        return self.consistency_residual(t_samples, step) < tol


@dataclass(frozen=True)
class LieModel:
    """Lie group model with structure constant ``alpha`` = theta(xi)/2.

    ``alpha == 0`` is allowed and gives the flat F0 (cosymplectic) case.
    """

    alpha: float
    structure: AcbmStructure = field(default_factory=model_structure, compare=False)

    @property
    def theta_xi(self) -> float:
        return 2.0 * self.alpha

    @property
    def is_f0(self) -> bool:
        return self.alpha == 0

    @cached_property
    def structure_constants(self) -> np.ndarray:
        """c[i, j] holds the components of [E_i, E_j]."""
        a = self.alpha
        c = np.zeros((3, 3, 3))
        c[0, 2] = (0.0, a, 0.0)
        c[2, 0] = (0.0, -a, 0.0)
        c[1, 2] = (-a, 0.0, 0.0)
        c[2, 1] = (a, 0.0, 0.0)
        return frozen(c)

    def bracket(self, X, Y) -> np.ndarray:
        return frozen(np.einsum("i,j,ijk->k", X, Y, self.structure_constants))

    def jacobi_residual(self) -> float:
        worst = 0.0
        for X, Y, Z in itertools.product(BASIS, repeat=3):
            total = (
                self.bracket(X, self.bracket(Y, Z))
                + self.bracket(Y, self.bracket(Z, X))
                + self.bracket(Z, self.bracket(X, Y))
            )
            worst = max(worst, float(np.abs(total).max()))
        return worst

    @cached_property
    def g_tilde(self) -> MetricTensor:
        return assoc_metric(self.structure)

    @cached_property
    def connection(self) -> np.ndarray:
        return koszul_connection(self.structure.g, self.bracket)

    def nabla(self, X, Y) -> np.ndarray:
        """nabla_X Y for constant-coefficient X, Y."""
        return frozen(np.einsum("i,j,ijk->k", X, Y, self.connection))

    def nabla_along(self, tangent, V: CurveVectorField, t: float) -> np.ndarray:
        """Covariant derivative of V along a curve with velocity ``tangent``."""
        return frozen(np.asarray(V.dcoeffs(t), dtype=float) + self.nabla(tangent, V(t)))

    def tilde_nabla(self, X, Y) -> np.ndarray:
        """Levi-Civita connection of g~, via its difference from nabla."""
        S = self.structure
        pY = S.apply_phi(Y)
        shift = self.alpha * (inner(S.g, X, pY) - inner(S.g, S.apply_phi(X), pY))
        return frozen(self.nabla(X, Y) + shift * S.xi)

    def tilde_nabla_along(self, tangent, V: CurveVectorField, t: float) -> np.ndarray:
        return frozen(np.asarray(V.dcoeffs(t), dtype=float) + self.tilde_nabla(tangent, V(t)))

    def torsion_residual(self, nabla=None) -> float:
        nabla = nabla or self.nabla
        return max(
            float(np.abs(nabla(X, Y) - nabla(Y, X) - self.bracket(X, Y)).max())
            for X, Y in itertools.product(BASIS, repeat=2)
        )

    def compatibility_residual(self, metric: MetricTensor | None = None, nabla=None) -> float:
        """max |m(nabla_{E_i} E_j, E_k) + m(E_j, nabla_{E_i} E_k)| over the basis."""
        metric = metric or self.structure.g
        nabla = nabla or self.nabla
        return max(
            abs(inner(metric, nabla(X, Y), Z) + inner(metric, Y, nabla(X, Z)))
            for X, Y, Z in itertools.product(BASIS, repeat=3)
        )


def koszul_connection(g: MetricTensor, bracket) -> np.ndarray:
    """Solves 2 g(nabla_{E_i} E_j, E_k) = g([E_i,E_j],E_k) + g([E_k,E_i],E_j) + g([E_k,E_j],E_i).

    Returns ``conn`` with ``conn[i, j]`` the components of nabla_{E_i} E_j.
    """
    if abs(np.linalg.det(g.m)) <= NONDEGENERACY_TOL:
        raise DegenerateMetricError("Koszul system needs a nondegenerate metric")
    conn = np.zeros((3, 3, 3))
    for i, j in itertools.product(range(3), repeat=2):
        Ei, Ej = BASIS[i], BASIS[j]
        rhs = np.array([
            inner(g, bracket(Ei, Ej), Ek) + inner(g, bracket(Ek, Ei), Ej) + inner(g, bracket(Ek, Ej), Ei)
            for Ek in BASIS
        ]) / 2.0
        conn[i, j] = np.linalg.solve(g.m, rhs)
    # the model's components are alpha times 0/+-1; drop signed zeros from the solve
    conn[conn == 0.0] = 0.0
    return frozen(conn)


def expected_connection(alpha: float) -> np.ndarray:
    """Closed-form connection table of the model, kept as a test fixture."""
    conn = np.zeros((3, 3, 3))
    conn[0, 1] = (0.0, 0.0, alpha)
    conn[1, 0] = (0.0, 0.0, alpha)
    conn[0, 2] = (0.0, alpha, 0.0)
    conn[1, 2] = (-alpha, 0.0, 0.0)
    return frozen(conn)
