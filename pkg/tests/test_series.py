import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from motiftrack import (
    TimeSeries,
    dump_series_text,
    euclidean_distance,
    load_series_text,
    z_normalize,
)


class TestTimeSeries:
    def test_empty_rejected(self):
        with pytest.raises(ValueError, match="empty input"):
            TimeSeries(np.array([]))

    def test_nonfinite_rejected(self):
        with pytest.raises(ValueError, match="finite"):
            TimeSeries(np.array([1.0, np.nan]))
        with pytest.raises(ValueError, match="finite"):
            TimeSeries(np.array([1.0, np.inf]))

    def test_length(self):
        assert len(TimeSeries(np.array([1.0, 2.0, 3.0]))) == 3


class TestZNormalize:
    def test_three_points(self):
        out = z_normalize(TimeSeries(np.array([1.0, 2.0, 3.0])))
        assert out.values == pytest.approx([-1.224745, 0.0, 1.224745], abs=1e-6)
        assert out.mean_used == pytest.approx(2.0)
        # population std, not sample std
        assert out.std_used == pytest.approx(math.sqrt(2.0 / 3.0))

    def test_constant_maps_to_zeros(self):
        out = z_normalize(TimeSeries(np.array([5.0, 5.0, 5.0, 5.0])))
        assert list(out.values) == [0.0, 0.0, 0.0, 0.0]
        assert out.std_used == 0.0

    def test_single_point(self):
        out = z_normalize(TimeSeries(np.array([0.0])))
        assert list(out.values) == [0.0]
        assert out.std_used == 0.0

    @given(st.lists(st.integers(-1000, 1000), min_size=2, max_size=60))
    def test_idempotent_on_nonconstant(self, raw):
        if len(set(raw)) < 2:
            raw = raw + [max(raw) + 1]
        once = z_normalize(TimeSeries(np.array(raw, dtype=float)))
        twice = z_normalize(TimeSeries(once.values))
        assert np.max(np.abs(once.values - twice.values)) < 1e-9

    @given(st.lists(st.integers(-50, 50), min_size=2, max_size=60))
    def test_preserves_equality_structure(self, raw):
        if len(set(raw)) < 2:
            raw = raw + [max(raw) + 1]
        out = z_normalize(TimeSeries(np.array(raw, dtype=float))).values
        for i in range(len(raw)):
            for j in range(i + 1, len(raw)):
                assert (raw[i] == raw[j]) == (out[i] == out[j])


class TestEuclideanDistance:
    def test_identity(self):
        assert euclidean_distance([1.0, 2.0], [1.0, 2.0]) == 0.0

    def test_three_four_five(self):
        assert euclidean_distance([0.0, 0.0], [3.0, 4.0]) == pytest.approx(5.0)

    def test_sqrt_three(self):
        assert euclidean_distance([1, 1, 1], [2, 2, 2]) == pytest.approx(1.732051, abs=1e-6)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="dimension mismatch"):
            euclidean_distance([1.0], [1.0, 2.0])

    @given(
        st.lists(st.floats(-1e3, 1e3), min_size=1, max_size=20),
        st.lists(st.floats(-1e3, 1e3), min_size=1, max_size=20),
    )
    def test_symmetric_and_nonnegative(self, x, y):
        n = min(len(x), len(y))
        x, y = x[:n], y[:n]
        d = euclidean_distance(x, y)
        assert d >= 0.0
        assert d == euclidean_distance(y, x)

    @given(
        st.integers(1, 12).flatmap(
            lambda n: st.tuples(
                st.lists(st.floats(-100, 100), min_size=n, max_size=n),
                st.lists(st.floats(-100, 100), min_size=n, max_size=n),
                st.lists(st.floats(-100, 100), min_size=n, max_size=n),
            )
        )
    )
    def test_triangle_inequality(self, xyz):
        x, y, z = xyz
        assert euclidean_distance(x, z) <= (
            euclidean_distance(x, y) + euclidean_distance(y, z) + 1e-9
        )


class TestSeriesFiles:
    def test_parses_comments_and_blanks(self):
        text = "# header\n1\n\n2.5\n  3 \n"
        series = load_series_text(text)
        assert list(series.values) == [1.0, 2.5, 3.0]

    def test_rejects_garbage_with_line_number(self):
        with pytest.raises(ValueError, match="line 2"):
            load_series_text("1\nnot-a-number\n")

    def test_rejects_empty(self):
        with pytest.raises(ValueError, match="empty input"):
            load_series_text("# only a comment\n")

    def test_round_trip_integers(self):
        text = dump_series_text([5.0, 3.0, 6.0])
        assert text == "5\n3\n6\n"
        assert list(load_series_text(text).values) == [5.0, 3.0, 6.0]

    def test_round_trip_decimals(self):
        values = [1.5, -2.25, 7.0]
        assert list(load_series_text(dump_series_text(values)).values) == values
