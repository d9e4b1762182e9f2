"""Frenet theory of phi-slant null curves in a 3-dimensional F4 Lie group model."""

from .errors import (
    DegenerateMetricError,
    DegenerateSlantError,
    GeometryError,
    InvalidReparameterizationError,
    UnsupportedCurveTypeError,
)
from .lie_model import CurveVectorField, LieModel
from .null_frenet import (
    NullFrenetFrame,
    SlantParams,
    build_tangent,
    classify_null_curve,
    frame_family,
    unique_frame_f1,
)
from .structure import AcbmStructure, assoc_metric, model_structure, validate_structure
from .tensor import Causal, MetricTensor, causal_character, exp_series, inner
from .tilde import HelixClass, classify_helix, tilde_frenet_order3

__version__ = "0.1.0"

__all__ = [
    "AcbmStructure",
    "Causal",
    "CurveVectorField",
    "DegenerateMetricError",
    "DegenerateSlantError",
    "GeometryError",
    "HelixClass",
    "InvalidReparameterizationError",
    "LieModel",
    "MetricTensor",
    "NullFrenetFrame",
    "SlantParams",
    "UnsupportedCurveTypeError",
    "assoc_metric",
    "build_tangent",
    "causal_character",
    "classify_helix",
    "classify_null_curve",
    "exp_series",
    "frame_family",
    "inner",
    "model_structure",
    "tilde_frenet_order3",
    "unique_frame_f1",
    "validate_structure",
]
