"""phi-slant null curves in the Lie group model and their Frenet frames.

A phi-slant null curve has constant eta(C') = a and g(C', phi C') = b with
(a, b) != (0, 0). In the model its velocity is a left-invariant field, so
every frame field below has constant frame coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateSlantError, InvalidReparameterizationError
from .lie_model import CurveVectorField, LieModel
from .structure import AcbmStructure
from .tensor import as_vector, frozen, inner


@dataclass(frozen=True)
class SlantParams:
    a: float
    b: float

    def __post_init__(self):
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise ValueError("slant constants must be finite")
        if self.a == 0 and self.b == 0:
            raise DegenerateSlantError(
                "no phi-slant null curve has a = b = 0: the contact distribution "
                "would be totally null, contradicting its signature (1, 1)"
            )

    @property
    def eps(self) -> int:
        """sign(b), taken as +1 at b = 0."""
        return -1 if self.b < 0 else 1

    @property
    def disc(self) -> float:
        """a^4 + b^2."""
        return self.a**4 + self.b**2

    @property
    def root(self) -> float:
        return math.hypot(self.a * self.a, self.b)

    @property
    def is_legendre(self) -> bool:
        return self.a == 0


def build_tangent(p: SlantParams) -> np.ndarray:
    """Velocity (p, q, r) of the model curve with slant constants (a, b)."""
    a2, root = p.a * p.a, p.root
    y = math.sqrt((root + a2) / 2.0)
    # b = -2 x y; dividing avoids the cancellation in sqrt((root - a^2) / 2)
    x = -p.b / (2.0 * y) + 0.0  # no signed zero
    return as_vector((x, y, p.a))


@dataclass(frozen=True)
class SlantInvariants:
    a: float
    b: float
    null_residual: float


def slant_invariants(tangent, S: AcbmStructure) -> SlantInvariants:
    return SlantInvariants(
        a=inner(S.g, tangent, S.xi),
        b=inner(S.g, tangent, S.apply_phi(tangent)),
        null_residual=abs(inner(S.g, tangent, tangent)),
    )


def contact_gram(tangent, S: AcbmStructure) -> np.ndarray:
    """Gram matrix of (C', phi C') under g."""
    pc = S.apply_phi(tangent)
    vs = (tangent, pc)
    return frozen([[inner(S.g, u, v) for v in vs] for u in vs])


@dataclass(frozen=True)
class FrameCoefficients:
    """Coordinates of W and N in the basis {xi, C', phi C'}.

    W = w_xi xi + beta C' + w_phi phi C', N = n_xi xi + n_tan C' + n_phi phi C'.
    """

    beta: float
    w_xi: float
    w_phi: float
    n_xi: float
    n_tan: float
    n_phi: float


def frame_coefficients(p: SlantParams, beta: float = 0.0) -> FrameCoefficients:
    a, b, disc, root = p.a, p.b, p.disc, p.root
    return FrameCoefficients(
        beta=beta,
        w_xi=-b / root,
        w_phi=a / root,
        n_xi=(a**3 + beta * b * root) / disc,
        n_tan=-(a * a + beta * beta * disc) / (2.0 * disc),
        n_phi=(b - beta * a * root) / disc,
    )


def frame_family(p: SlantParams, model: LieModel, beta: float = 0.0) -> tuple[np.ndarray, np.ndarray]:
    """(W, N) of the general Frenet frame with screen parameter ``beta``.

    The frame {C', N, W} has the orientation of {C', xi, phi C'}.
    """
    S = model.structure
    tangent = build_tangent(p)
    phi_c = S.apply_phi(tangent)
    c = frame_coefficients(p, beta)
    W = c.w_xi * S.xi + c.beta * tangent + c.w_phi * phi_c
    N = c.n_xi * S.xi + c.n_tan * tangent + c.n_phi * phi_c
    return as_vector(W), as_vector(N)


def frame_relations(tangent, N, W, S: AcbmStructure) -> dict[str, float]:
    """Residuals of the defining relations of a null Frenet frame {C', N, W}."""
    g = S.g
    return {
        "g(C,N)=1": abs(inner(g, tangent, N) - 1.0),
        "g(W,W)=1": abs(inner(g, W, W) - 1.0),
        "g(N,N)=0": abs(inner(g, N, N)),
        "g(N,W)=0": abs(inner(g, N, W)),
        "g(C,W)=0": abs(inner(g, tangent, W)),
    }


def h_and_k1(p: SlantParams, model: LieModel, beta: float = 0.0) -> tuple[float, float]:
    """Closed forms h = -beta k1 and k1 = theta(xi) sqrt(a^4 + b^2) / 2."""
    k1 = model.theta_xi * p.root / 2.0
    return -beta * k1, k1


def h_and_k1_direct(p: SlantParams, model: LieModel, beta: float = 0.0) -> tuple[float, float]:
    """h = g(nabla_C C, N) and k1 = g(nabla_C C, W) evaluated in the model."""
    tangent = build_tangent(p)
    W, N = frame_family(p, model, beta)
    acc = model.nabla(tangent, tangent)
    g = model.structure.g
    return inner(g, acc, N), inner(g, acc, W)


def k2_closed(p: SlantParams, model: LieModel) -> float:
    return p.a**2 * model.theta_xi / (4.0 * p.root)


@dataclass(frozen=True, eq=False)
class NullFrenetFrame:
    """Frenet frame {C', N, W} with curvatures h, k1, k2.

    Frame fields are stored by their constant frame coefficients.
    """

    params: SlantParams
    tangent: np.ndarray
    N: np.ndarray
    W: np.ndarray
    h: float
    k1: float
    k2: float
    beta: float = 0.0

    def fields(self) -> dict[str, CurveVectorField]:
        return {
            "tangent": CurveVectorField.constant(self.tangent),
            "N": CurveVectorField.constant(self.N),
            "W": CurveVectorField.constant(self.W),
        }


def unique_frame_f1(p: SlantParams, model: LieModel) -> NullFrenetFrame:
    """The frame (beta = 0) for which the original parameter is distinguished."""
    tangent = build_tangent(p)
    W, N = frame_family(p, model, 0.0)
    h, k1 = h_and_k1(p, model, 0.0)
    return NullFrenetFrame(p, tangent, N, W, h + 0.0, k1, k2_closed(p, model), 0.0)


def general_frame(p: SlantParams, model: LieModel, beta: float) -> NullFrenetFrame:
    """Frame from the family with screen parameter ``beta`` (k2 left as g(nabla N, W))."""
    tangent = build_tangent(p)
    W, N = frame_family(p, model, beta)
    h, k1 = h_and_k1(p, model, beta)
    k2 = inner(model.structure.g, model.nabla(tangent, N), W)
    return NullFrenetFrame(p, tangent, N, W, h, k1, k2, beta)


def frenet_residuals(frame: NullFrenetFrame, model: LieModel, t_samples) -> dict[str, float]:
    """Max-norm residuals of the Frenet equations over ``t_samples``.

    The general equations are used, so frames with beta != 0 are handled;
    for the distinguished frame h = 0 and they reduce to
    nabla C = k1 W, nabla N = k2 W, nabla W = -k2 C - k1 N.
    """
    f = frame.fields()
    tangent = frame.tangent
    worst = {"tangent": 0.0, "N": 0.0, "W": 0.0}
    for t in t_samples:
        C, N, W = f["tangent"](t), f["N"](t), f["W"](t)
        r_c = model.nabla_along(tangent, f["tangent"], t) - (frame.h * C + frame.k1 * W)
        r_n = model.nabla_along(tangent, f["N"], t) - (-frame.h * N + frame.k2 * W)
        r_w = model.nabla_along(tangent, f["W"], t) - (-frame.k2 * C - frame.k1 * N)
        worst["tangent"] = max(worst["tangent"], float(np.abs(r_c).max()))
        worst["N"] = max(worst["N"], float(np.abs(r_n).max()))
        worst["W"] = max(worst["W"], float(np.abs(r_w).max()))
    return worst


def acceleration_closed(p: SlantParams, model: LieModel) -> np.ndarray:
    """nabla_C C = -(b theta/2) xi + (a theta/2) phi C."""
    S = model.structure
    th = model.theta_xi
    tangent = build_tangent(p)
    return frozen(-(p.b * th / 2.0) * S.xi + (p.a * th / 2.0) * S.apply_phi(tangent))


def phi_geodesic_residual(p: SlantParams, model: LieModel) -> float:
    tangent = build_tangent(p)
    return float(np.abs(model.nabla(tangent, tangent) - model.structure.apply_phi(tangent)).max())


@dataclass(frozen=True)
class NullCurveFlags:
    geodesic: bool
    generalized_null_cubic: bool
    phi_geodesic: bool
    legendre: bool

    def as_dict(self) -> dict[str, bool]:
        return {
            "geodesic": self.geodesic,
            "generalized_null_cubic": self.generalized_null_cubic,
            "phi_geodesic": self.phi_geodesic,
            "legendre": self.legendre,
        }


def classify_null_curve(p: SlantParams, model: LieModel) -> NullCurveFlags:
    """Exact parameter conditions; no numerical thresholds.

    phi-geodesic means nabla_C C = phi C, which from the closed-form
    acceleration happens iff b = 0 and a theta(xi) = 2. The product is
    compared with a 1e-12 relative slack so that e.g. a = 0.1, theta = 20
    is not lost to rounding.
    """
    theta = model.theta_xi
    return NullCurveFlags(
        geodesic=theta == 0,
        generalized_null_cubic=p.a == 0 or theta == 0,
        phi_geodesic=p.b == 0 and math.isclose(p.a * theta, 2.0, rel_tol=1e-12, abs_tol=0.0),
        legendre=p.a == 0,
    )


def reparam_behavior(p: SlantParams, c0: float, c1: float) -> tuple[float, float]:
    """Slant constants after the affine change t = c1 s + c0."""
    if c1 == 0:
        raise InvalidReparameterizationError("c1 = 0 is not a reparameterization")
    return c1 * p.a, c1 * c1 * p.b
