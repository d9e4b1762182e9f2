import numpy as np
import pytest
import scipy.linalg
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from bmfrenet.errors import DegenerateMetricError
from bmfrenet.tensor import (
    Causal,
    MetricTensor,
    as_vector,
    causal_character,
    exp_series,
    inner,
    signature,
    vector,
)

G = MetricTensor.diag(1.0, -1.0, 1.0)
finite = st.floats(-10, 10, allow_nan=False, allow_infinity=False)
vec3 = arrays(np.float64, 3, elements=finite)
unit_entries = arrays(np.float64, (3, 3), elements=st.floats(-1, 1, allow_nan=False))


class TestInner:
    @pytest.mark.parametrize(
        "u, v, expected",
        [
            ((1, 0, 0), (1, 0, 0), 1.0),
            ((0, 1, 0), (0, 1, 0), -1.0),
            ((1, 1, 0), (1, 1, 0), 0.0),
        ],
    )
    def test_frame_signature(self, u, v, expected):
        assert inner(G, vector(*u), vector(*v)) == expected

    @given(vec3, vec3)
    def test_symmetric(self, u, v):
        assert inner(G, u, v) == inner(G, v, u)

    @given(vec3, vec3, vec3, finite)
    def test_bilinear(self, u, v, w, lam):
        lhs = inner(G, lam * u + w, v)
        rhs = lam * inner(G, u, v) + inner(G, w, v)
        assert lhs == pytest.approx(rhs, abs=1e-9 * (1 + abs(lhs)))


class TestMetricTensor:
    def test_lower_triangle_is_mirrored(self):
        m = MetricTensor(np.array([[1.0, 99.0, 0.0], [2.0, -1.0, 0.0], [0.0, 0.0, 1.0]]))
        assert m.m[0, 1] == 2.0 and m.m[1, 0] == 2.0

    def test_degenerate_rejected(self):
        with pytest.raises(DegenerateMetricError):
            MetricTensor.diag(1.0, 0.0, 1.0)

    def test_read_only(self):
        with pytest.raises(ValueError):
            G.m[0, 0] = 5.0

    def test_signature(self):
        assert G.signature() == (2, 1)
        assert signature(np.eye(3)) == (3, 0)


class TestVectors:
    def test_nonfinite_rejected(self):
        with pytest.raises(ValueError):
            vector(1.0, float("nan"), 0.0)
        with pytest.raises(ValueError):
            as_vector([1.0, 2.0])

    def test_values_are_immutable(self):
        v = vector(1, 2, 3)
        with pytest.raises(ValueError):
            v[0] = 0.0


class TestCausalCharacter:
    @pytest.mark.parametrize(
        "v, expected",
        [
            ((1, 1, 0), Causal.NULL),
            ((0, 0, 1), Causal.SPACELIKE),
            ((0, 2, 0), Causal.TIMELIKE),
            ((0, 0, 0), Causal.ZERO),
        ],
    )
    def test_examples(self, v, expected):
        assert causal_character(G, vector(*v), 1e-9) is expected

    def test_tol_must_be_positive(self):
        with pytest.raises(ValueError):
            causal_character(G, vector(1, 0, 0), 0.0)

    @given(
        arrays(np.float64, 3, elements=st.floats(-2, 2, allow_nan=False)),
        st.floats(0.5, 2.0),
        st.sampled_from([-1.0, 1.0]),
    )
    def test_scale_invariant(self, v, lam, sign):
        # keep clear of the tolerance band where scaling can legitimately flip the verdict
        q = inner(G, v, v)
        if 0 < abs(q) < 1e-6 or 0 < np.abs(v).max() < 1e-6:
            return
        assert causal_character(G, sign * lam * v) is causal_character(G, v)


class TestExpSeries:
    def test_zero(self):
        np.testing.assert_array_equal(exp_series(np.zeros((3, 3))), np.eye(3))

    def test_nilpotent_terminates(self):
        A = np.array([[0.0, 0.0, 2.0], [0.0, 0.0, -1.0], [0.0, 0.0, 0.0]])
        assert not np.any(A @ A)
        np.testing.assert_array_equal(exp_series(A), np.eye(3) + A)

    @settings(max_examples=50)
    @given(unit_entries)
    def test_inverse(self, A):
        np.testing.assert_allclose(exp_series(A) @ exp_series(-A), np.eye(3), atol=1e-10)

    @settings(max_examples=50)
    @given(arrays(np.float64, (3, 3), elements=st.floats(-5, 5, allow_nan=False)))
    def test_agrees_with_pade(self, A):
        # scipy's Pade approximant is a third, unrelated route
        expected = scipy.linalg.expm(A)
        scale = max(1.0, np.abs(expected).max())
        np.testing.assert_allclose(exp_series(A), expected, atol=1e-11 * scale)

    def test_tol_must_be_positive(self):
        with pytest.raises(ValueError):
            exp_series(np.zeros((3, 3)), tol=0)
