import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from quantum_owa import (
    MAX_LIMIT,
    MIN_LIMIT,
    WeightVector,
    attitudinal_weights,
    classical_owa,
    dispersion,
    orness,
)
from quantum_owa.errors import DegenerateLength, InvalidAlpha, InvalidLength, LengthMismatch

from oracles import naive_weights

# (i/5)**4 telescoped: (1, 15, 65, 175, 369) / 625
WEIGHTS_A02 = [1 / 625, 15 / 625, 65 / 625, 175 / 625, 369 / 625]


@pytest.mark.parametrize(
    "alpha, expected",
    [
        (0.2, [0.0016, 0.024, 0.104, 0.28, 0.5904]),
        (0.5, [0.2] * 5),
        (0.8, [0.6687, 0.1265, 0.0848, 0.0656, 0.0543]),
    ],
)
def test_published_weights(alpha, expected):
    np.testing.assert_allclose(attitudinal_weights(5, alpha).weights, expected, atol=1e-4)


def test_alpha_02_exact():
    np.testing.assert_allclose(attitudinal_weights(5, 0.2).weights, WEIGHTS_A02, atol=1e-15)


def test_neutral_is_exactly_uniform():
    w = attitudinal_weights(7, 0.5).weights
    assert np.all(w == 1 / 7)


@pytest.mark.parametrize("alpha", [0.01, 0.3, 0.7, 0.99, MIN_LIMIT, MAX_LIMIT])
def test_single_position(alpha):
    assert attitudinal_weights(1, alpha).weights.tolist() == [1.0]


def test_limit_markers():
    assert attitudinal_weights(4, MIN_LIMIT).weights.tolist() == [0, 0, 0, 1]
    assert attitudinal_weights(4, MAX_LIMIT).weights.tolist() == [1, 0, 0, 0]


@pytest.mark.parametrize("n", [2, 5, 10])
def test_limits_approached(n):
    np.testing.assert_allclose(
        attitudinal_weights(n, 1e-3).weights, attitudinal_weights(n, MIN_LIMIT).weights, atol=1e-2
    )
    np.testing.assert_allclose(
        attitudinal_weights(n, 1 - 1e-3).weights, attitudinal_weights(n, MAX_LIMIT).weights, atol=1e-2
    )


@pytest.mark.parametrize("alpha", [0.0, 1.0, -0.2, 1.5, math.nan, "0.5", True])
def test_invalid_alpha(alpha):
    with pytest.raises(InvalidAlpha):
        attitudinal_weights(3, alpha)


@pytest.mark.parametrize("n", [0, -3, 2.5])
def test_invalid_length(n):
    with pytest.raises(InvalidLength):
        attitudinal_weights(n, 0.5)


@given(st.integers(1, 40), st.floats(0.02, 0.98))
def test_weight_law(n, alpha):
    w = attitudinal_weights(n, alpha).weights
    assert np.all(w >= 0)
    assert math.fsum(w) == pytest.approx(1.0, abs=1e-12)
    np.testing.assert_allclose(w, naive_weights(n, alpha), atol=1e-14)
    if n > 1 and alpha < 0.49:
        assert np.all(np.diff(w) > 0)
    if n > 1 and alpha > 0.51:
        assert np.all(np.diff(w) < 0)


def test_weight_vector_is_read_only():
    w = attitudinal_weights(3, 0.4)
    with pytest.raises(ValueError):
        w.weights[0] = 1.0


def test_weight_vector_rejects_bad_input():
    with pytest.raises(ValueError):
        WeightVector([0.5, 0.6])
    with pytest.raises(ValueError):
        WeightVector([1.5, -0.5])


class TestClassicalOWA:
    values = (0.3, 0.9, 0.6)

    def test_max(self):
        assert classical_owa(self.values, [1, 0, 0]) == 0.9

    def test_min(self):
        assert classical_owa(self.values, [0, 0, 1]) == 0.3

    def test_mean(self):
        assert classical_owa(self.values, attitudinal_weights(3, 0.5)) == pytest.approx(0.6, abs=1e-15)

    def test_against_hand_dot_product(self):
        # sorted (0.6, 0.5, 0.4, 0.3, 0.2) . (1, 15, 65, 175, 369)/625 = 802/3125
        got = classical_owa([0.6, 0.4, 0.3, 0.5, 0.2], attitudinal_weights(5, 0.2))
        assert got == pytest.approx(802 / 3125, abs=1e-14)

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            classical_owa([0.1, 0.2], [1.0])

    @given(st.lists(st.floats(0, 1), min_size=1, max_size=12))
    def test_one_hot_extremes(self, values):
        n = len(values)
        assert classical_owa(values, attitudinal_weights(n, MAX_LIMIT)) == max(values)
        assert classical_owa(values, attitudinal_weights(n, MIN_LIMIT)) == min(values)


class TestOrness:
    @pytest.mark.parametrize("n", [2, 3, 8])
    def test_uniform(self, n):
        assert orness(attitudinal_weights(n, 0.5)) == pytest.approx(0.5, abs=1e-15)

    def test_max_min(self):
        assert orness([1, 0, 0]) == 1.0
        assert orness([0, 0, 1]) == 0.0

    def test_hand_sum(self):
        # sum((5 - i)/4 * w_i) with w = (1, 15, 65, 175, 369)/625 -> 177/1250
        assert orness(attitudinal_weights(5, 0.2)) == pytest.approx(177 / 1250, abs=1e-15)

    def test_degenerate(self):
        with pytest.raises(DegenerateLength):
            orness([1.0])

    @given(st.integers(2, 30), st.floats(0.02, 0.98))
    def test_in_unit_interval_and_ordered(self, n, alpha):
        o = orness(attitudinal_weights(n, alpha))
        assert -1e-12 <= o <= 1 + 1e-12
        if alpha < 0.49:
            assert o < 0.5
        elif alpha > 0.51:
            assert o > 0.5


class TestDispersion:
    def test_one_hot(self):
        assert dispersion([0, 0, 1, 0, 0]) == 0.0

    def test_uniform(self):
        assert dispersion(attitudinal_weights(5, 0.5)) == pytest.approx(math.log(5), abs=1e-15)
        assert dispersion(attitudinal_weights(5, 0.5)) == pytest.approx(1.6094, abs=1e-4)

    def test_hand_sum(self):
        # -sum(w ln w) for (i/5)**0.25 differences, summed term by term with math.log
        assert dispersion(attitudinal_weights(5, 0.8)) == pytest.approx(1.076814119827013, abs=1e-12)

    @given(st.integers(1, 30), st.floats(0.02, 0.98))
    def test_bounds(self, n, alpha):
        h = dispersion(attitudinal_weights(n, alpha))
        assert 0.0 <= h <= math.log(n) + 1e-12
