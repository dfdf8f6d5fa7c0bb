"""Unit tests for utility functions in sbihari.utils."""

import numpy as np
import pytest

from sbihari.utils import (
    NEG_INF,
    POS_INF,
    display_to_ext,
    ext_to_display,
    is_integer_multiple,
    log_grid,
    p_mean,
)

pytestmark = pytest.mark.unit


class TestExtToDisplay:
    """Tests for ext_to_display function."""

    def test_finite_values_pass_through(self):
        """Test that finite values are returned as floats."""
        assert ext_to_display(1.5) == 1.5
        assert ext_to_display(0) == 0.0
        assert ext_to_display("2.5") == 2.5

    def test_sentinels(self):
        """Test that the infinities become their display strings."""
        assert ext_to_display(POS_INF) == "infinity"
        assert ext_to_display(NEG_INF) == "-infinity"

    def test_nan_input(self):
        """Test that NaN returns 'NaN'."""
        assert ext_to_display(float("nan")) == "NaN"
        assert ext_to_display(np.nan) == "NaN"

    def test_invalid_input(self):
        """Test that unconvertible inputs return 'Invalid'."""
        assert ext_to_display(None) == "Invalid"
        assert ext_to_display("not a number") == "Invalid"


class TestDisplayToExt:
    """Tests for display_to_ext function."""

    def test_sentinel_strings(self):
        """Test the accepted spellings of the infinities."""
        assert display_to_ext("infinity") == POS_INF
        assert display_to_ext("inf") == POS_INF
        assert display_to_ext("+inf") == POS_INF
        assert display_to_ext(" Infinity ") == POS_INF
        assert display_to_ext("-infinity") == NEG_INF
        assert display_to_ext("-inf") == NEG_INF

    def test_numbers(self):
        """Test that numeric strings and numbers become floats."""
        assert display_to_ext("2.5") == 2.5
        assert display_to_ext(3) == 3.0

    def test_inverse_of_ext_to_display(self):
        """Test that display strings convert back to the same extended real."""
        for value in (POS_INF, NEG_INF, 0.25):
            assert display_to_ext(ext_to_display(value)) == value

    def test_garbage_raises(self):
        """Test that unparseable strings raise ValueError."""
        with pytest.raises(ValueError):
            display_to_ext("abc")


class TestLogGrid:
    """Tests for log_grid function."""

    def test_endpoints_and_size(self):
        """Test that both endpoints are included."""
        grid = log_grid(1e-3, 1e3, 64)
        assert len(grid) == 64
        assert grid[0] == pytest.approx(1e-3)
        assert grid[-1] == pytest.approx(1e3)

    def test_constant_ratio(self):
        """Test that consecutive points have a constant ratio."""
        grid = log_grid(1.0, 16.0, 5)
        np.testing.assert_allclose(grid, [1.0, 2.0, 4.0, 8.0, 16.0])

    def test_invalid_arguments(self):
        """Test that bad bounds or sizes raise ValueError."""
        with pytest.raises(ValueError, match="0 < lo < hi"):
            log_grid(0.0, 1.0, 10)
        with pytest.raises(ValueError, match="0 < lo < hi"):
            log_grid(2.0, 1.0, 10)
        with pytest.raises(ValueError, match="at least 2"):
            log_grid(1.0, 2.0, 1)


class TestIsIntegerMultiple:
    """Tests for is_integer_multiple function."""

    def test_aligned(self):
        """Test horizons aligned with the grid."""
        assert is_integer_multiple(1.0, 256)
        assert is_integer_multiple(1.5, 4)
        assert is_integer_multiple(0.1, 10)

    def test_misaligned(self):
        """Test horizons not aligned with the grid."""
        assert not is_integer_multiple(1.5, 3)
        assert not is_integer_multiple(0.3, 4)


class TestPMean:
    """Tests for p_mean function."""

    def test_constant_sample(self):
        """Test that a constant sample returns the constant."""
        assert p_mean([4.0, 4.0, 4.0], 0.5) == pytest.approx(4.0)

    def test_two_point_sample(self):
        """Test ((sqrt(1) + sqrt(9)) / 2)^2 = 4."""
        assert p_mean([1.0, 9.0], 0.5) == pytest.approx(4.0)

    def test_p_one_is_mean(self):
        """Test that p = 1 gives the mean of absolute values."""
        assert p_mean([-1.0, 3.0], 1.0) == pytest.approx(2.0)

    def test_empty_raises(self):
        """Test that an empty sample raises ValueError."""
        with pytest.raises(ValueError):
            p_mean([], 0.5)
