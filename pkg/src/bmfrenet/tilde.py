"""The curves above, seen through the associated metric g~.

Two slant types are supported: Legendre curves (a = 0, b != 0), which are
g~-geodesics, and b = 0 curves, which are unit-speed g~-Frenet curves of
osculating order 3 with torsion equal to curvature. Mixed types (a and b
both nonzero) raise :class:`UnsupportedCurveTypeError`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import UnsupportedCurveTypeError
from .lie_model import LieModel
from .null_frenet import SlantParams, build_tangent, unique_frame_f1
from .structure import AcbmStructure, assoc_metric
from .tensor import PREDICATE_TOL, Causal, frozen, inner


def _check_type(p: SlantParams) -> None:
    if p.a != 0 and p.b != 0:
        raise UnsupportedCurveTypeError(
            f"g~ analysis covers a = 0 or b = 0 only; got a = {p.a!r}, b = {p.b!r}"
        )


def tilde_character(p: SlantParams, S: AcbmStructure) -> Causal:
    """Causal character of the curve with respect to g~.

    g~(C', C') = b + a^2, so Legendre curves follow sign(b) and b = 0
    curves are always spacelike.
    """
    _check_type(p)
    if p.a == 0:
        return Causal.SPACELIKE if p.b > 0 else Causal.TIMELIKE
    return Causal.SPACELIKE


def arclength_factor(p: SlantParams) -> float:
    """ds~/dt, so that C'(s~) = C'(t) / factor has unit g~-length."""
    _check_type(p)
    return math.sqrt(abs(p.b)) if p.a == 0 else abs(p.a)


def unit_tangent(p: SlantParams) -> np.ndarray:
    return frozen(build_tangent(p) / arclength_factor(p))


def legendre_tilde_geodesic_residual(p: SlantParams, model: LieModel) -> float:
    """Max-norm of the g~-acceleration of a Legendre curve in arclength."""
    if p.a != 0:
        raise UnsupportedCurveTypeError("the g~-geodesic property is stated for Legendre curves (a = 0)")
    u = unit_tangent(p)
    return float(np.abs(model.tilde_nabla(u, u)).max())


def tilde_slant_invariants(p: SlantParams, model: LieModel) -> tuple[float, float]:
    """(eta~(C'), g~(C', phi C')) of the g~-unit tangent, with eta~ = g~(., xi)."""
    S = model.structure
    gt = assoc_metric(S)
    u = unit_tangent(p)
    return inner(gt, u, S.xi), inner(gt, u, S.apply_phi(u))


@dataclass(frozen=True, eq=False)
class TildeApparatus:
    """g~-Frenet data of a unit-speed curve.

    ``E2``/``E3`` are None below osculating order 2/3; ``k_tilde`` and
    ``tau_tilde`` are then 0.
    """

    params: SlantParams
    order: int
    E1: np.ndarray
    E2: np.ndarray | None
    E3: np.ndarray | None
    k_tilde: float
    tau_tilde: float
    eps1: int
    eps2: int | None
    eps3: int | None

    def vectors(self) -> list[np.ndarray]:
        return [v for v in (self.E1, self.E2, self.E3) if v is not None]

    def signs(self) -> list[int]:
        return [e for e in (self.eps1, self.eps2, self.eps3) if e is not None]


def tilde_frenet_order3(p: SlantParams, model: LieModel) -> TildeApparatus:
    """g~-Frenet apparatus of a b = 0 curve.

    For alpha != 0 this is the order-3 frame E1 = C'/|a|,
    E2 = s (phi C'/a - xi) with s = sign(theta(xi)), E3 = (phi C' - C')/|a|,
    and k~ = tau~ = |theta(xi)|/2. For alpha = 0 the curve is a g~-geodesic
    and an order-1 apparatus is returned.
    """
    if p.b != 0 or p.a == 0:
        raise UnsupportedCurveTypeError("the order-3 g~-Frenet apparatus needs b = 0 and a != 0")
    S = model.structure
    tangent = build_tangent(p)
    E1 = frozen(tangent / abs(p.a))
    if model.theta_xi == 0:
        return TildeApparatus(p, 1, E1, None, None, 0.0, 0.0, 1, None, None)
    phi_c = S.apply_phi(tangent)
    sgn = 1.0 if model.theta_xi > 0 else -1.0
    E2 = frozen(sgn * (phi_c / p.a - S.xi))
    E3 = frozen((phi_c - tangent) / abs(p.a))
    k = abs(model.theta_xi) / 2.0
    return TildeApparatus(p, 3, E1, E2, E3, k, k, 1, 1, -1)


def tilde_frenet_residuals(app: TildeApparatus, model: LieModel) -> dict[str, float]:
    """Residuals of the g~-Frenet system in the arclength parameter.

    For order 3 with signs (1, 1, -1):
    E1' - k E2, E2' + k E1 + tau E3, E3' + tau E2. All fields have constant
    coefficients, so d/ds~ acts through tilde_nabla alone.
    """
    u = app.E1

    def d(V):
        return model.tilde_nabla(u, V)

    if app.order == 1:
        return {"E1": float(np.abs(d(app.E1)).max())}
    e1, e2, e3 = app.eps1, app.eps2, app.eps3
    k, tau = app.k_tilde, app.tau_tilde
    return {
        "E1": float(np.abs(d(app.E1) - e2 * k * app.E2).max()),
        "E2": float(np.abs(d(app.E2) + e1 * k * app.E1 - e3 * tau * app.E3).max()),
        "E3": float(np.abs(d(app.E3) + e2 * tau * app.E2).max()),
    }


def tilde_gram(app: TildeApparatus, model: LieModel) -> np.ndarray:
    gt = assoc_metric(model.structure)
    vs = app.vectors()
    return frozen([[inner(gt, u, v) for v in vs] for u in vs])


def curvature_from_acceleration(app: TildeApparatus, model: LieModel) -> float:
    """k~ = |g~(A, A)|^(1/2) with A the g~-acceleration of the unit tangent."""
    acc = model.tilde_nabla(app.E1, app.E1)
    return math.sqrt(abs(inner(assoc_metric(model.structure), acc, acc)))


def f1_frame_expressions(p: SlantParams, model: LieModel) -> tuple[np.ndarray, np.ndarray]:
    """E2 and E3 rebuilt from the null frame {C', N1, W1}.

    E2 = s(-C'/(2a) - a N1 + W1), E3 = sign(a)(-C'/a + W1).
    """
    frame = unique_frame_f1(p, model)
    sgn = 1.0 if model.theta_xi > 0 else -1.0
    eps = 1.0 if p.a > 0 else -1.0
    C, N1, W1 = frame.tangent, frame.N, frame.W
    E2 = sgn * (-C / (2.0 * p.a) - p.a * N1 + W1)
    E3 = eps * (-C / p.a + W1)
    return frozen(E2), frozen(E3)


class HelixClass(str, enum.Enum):
    GEODESIC = "geodesic"
    PSEUDO_CIRCLE = "pseudo_circle"
    # constant k and tau; classify_helix always refines this to
    # pseudo_circle or proper_helix, so it is never returned
    HELIX = "helix"
    PROPER_HELIX = "proper_helix"
    GENERALIZED_HELIX = "generalized_helix"
    NONE = "none"


def _spread(xs: np.ndarray) -> float:
    return float(xs.max() - xs.min())


def classify_helix(k_samples, tau_samples, tol: float = PREDICATE_TOL) -> HelixClass:
    """Helix class from sampled curvature and torsion.

    A quantity is constant when its samples spread by less than ``tol``.
    """
    k = np.asarray(k_samples, dtype=float)
    tau = np.asarray(tau_samples, dtype=float)
    if k.size == 0 or k.shape != tau.shape:
        raise ValueError("need nonempty, aligned curvature and torsion samples")
    if np.all(np.abs(k) < tol):
        return HelixClass.GEODESIC
    k_const = _spread(k) < tol
    tau_const = _spread(tau) < tol
    if k_const and tau_const:
        if np.all(np.abs(tau) < tol):
            return HelixClass.PSEUDO_CIRCLE
        return HelixClass.PROPER_HELIX
    if k_const or tau_const or np.any(np.abs(tau) < tol):
        return HelixClass.NONE
    if _spread(k / tau) < tol:
        return HelixClass.GENERALIZED_HELIX
    return HelixClass.NONE
