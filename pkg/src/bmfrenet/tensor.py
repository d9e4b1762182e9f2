"""Signature-aware linear algebra in a fixed three-dimensional frame.

Vectors are length-3 float arrays of components relative to the frame
{E1, E2, E3}; matrices are 3x3 float arrays. Everything returned from this
module is marked read-only so values can be shared freely.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateMetricError

PREDICATE_TOL = 1e-9
IDENTITY_TOL = 1e-12
NONDEGENERACY_TOL = 1e-12


def frozen(a) -> np.ndarray:
    out = np.array(a, dtype=float)
    out.flags.writeable = False
    return out


def vector(c1: float, c2: float, c3: float) -> np.ndarray:
    return as_vector((c1, c2, c3))


def as_vector(v) -> np.ndarray:
    out = np.asarray(v, dtype=float)
    if out.shape != (3,):
        raise ValueError(f"frame vector must have 3 components, got shape {out.shape}")
    if not np.all(np.isfinite(out)):
        raise ValueError("frame vector components must be finite")
    return frozen(out)


def as_matrix(m) -> np.ndarray:
    out = np.asarray(m, dtype=float)
    if out.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got shape {out.shape}")
    if not np.all(np.isfinite(out)):
        raise ValueError("matrix entries must be finite")
    return frozen(out)


BASIS = tuple(as_vector(row) for row in np.eye(3))
ZERO = as_vector((0.0, 0.0, 0.0))


@dataclass(frozen=True, eq=False)
class MetricTensor:
    """Symmetric nondegenerate bilinear form given by its frame components.

    Only the lower triangle of ``m`` is read; it is mirrored so the stored
    matrix is symmetric bit for bit.
    """

    m: np.ndarray

    def __post_init__(self):
        raw = np.asarray(self.m, dtype=float)
        if raw.shape != (3, 3) or not np.all(np.isfinite(raw)):
            raise ValueError("metric must be a finite 3x3 array")
        lower = np.tril(raw)
        sym = lower + np.tril(raw, -1).T
        if abs(np.linalg.det(sym)) <= NONDEGENERACY_TOL:
            raise DegenerateMetricError(f"metric is degenerate: det = {np.linalg.det(sym):.3e}")
        object.__setattr__(self, "m", frozen(sym))

    @classmethod
    def diag(cls, *entries: float) -> MetricTensor:
        return cls(np.diag(entries))

    def __call__(self, u, v) -> float:
        return inner(self, u, v)

    @property
    def inverse(self) -> np.ndarray:
        return frozen(np.linalg.inv(self.m))

    def signature(self, threshold: float = PREDICATE_TOL) -> tuple[int, int]:
        """Counts (positive, negative) eigenvalues."""
        return signature(self.m, threshold)

    def lower(self, v) -> np.ndarray:
        """Index-lowering map v -> g(v, .)."""
        return frozen(self.m @ np.asarray(v, dtype=float))

    def __eq__(self, other):
        return isinstance(other, MetricTensor) and np.array_equal(self.m, other.m)

    def __hash__(self):
        return hash(self.m.tobytes())


def inner(g: MetricTensor, u, v) -> float:
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    return float(u @ g.m @ v)


def signature(m, threshold: float = PREDICATE_TOL) -> tuple[int, int]:
    eig = np.linalg.eigvalsh(np.asarray(m, dtype=float))
    return int(np.sum(eig > threshold)), int(np.sum(eig < -threshold))


class Causal(str, enum.Enum):
    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"
    NULL = "null"
    ZERO = "zero"


def causal_character(g: MetricTensor, v, tol: float = PREDICATE_TOL) -> Causal:
    if tol <= 0:
        raise ValueError("tol must be positive")
    v = np.asarray(v, dtype=float)
    if np.all(np.abs(v) < tol):
        return Causal.ZERO
    q = inner(g, v, v)
    if abs(q) < tol:
        return Causal.NULL
    return Causal.SPACELIKE if q > 0 else Causal.TIMELIKE


def exp_series(A, tol: float = 1e-18) -> np.ndarray:
    """Matrix exponential by a truncated Taylor series.

    Used as an independent check on closed-form exponentials, so it
    deliberately avoids anything clever beyond scaling and squaring: A is
    halved until its max-row-sum norm is at most 1/2, the series is summed
    until a term's largest entry drops below ``tol``, and the result is
    squared back up.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    A = np.array(A, dtype=float)
    norm = np.abs(A).sum(axis=1).max()
    squarings = 0
    if norm > 1.0:
        squarings = max(0, math.ceil(math.log2(norm / 0.5)))
        A = A / 2.0**squarings

    result = np.eye(3)
    term = np.eye(3)
    for k in range(1, 200):
        term = term @ A / k
        result = result + term
        if np.abs(term).max() < tol:
            break
    for _ in range(squarings):
        result = result @ result
    return frozen(result)
