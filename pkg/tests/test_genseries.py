"""Generating-function expansion and closed-form coefficients.

The series values were cross-checked against exhaustive diagram
enumeration (see test_diagrams / the acceptance suite); the closed
forms are checked against the series over the whole truncation window.
"""

import pytest
from hypothesis import given, strategies as st

from causetbox.coefficients import scaled_gamma_ratio
from causetbox.genseries import (
    closed_coeff_even,
    closed_coeff_odd,
    diagram_series,
)

WINDOW = diagram_series(4, 13)


class TestDiagramSeries:
    def test_bare_only_column(self):
        for m in range(1, 14):
            assert WINDOW.coefficient(0, m) == 1

    def test_no_constant_term(self):
        assert WINDOW.coefficient(0, 0) == 0

    def test_single_chord_values(self):
        assert WINDOW.coefficient(1, 2) == 4
        assert WINDOW.coefficient(1, 3) == 6

    def test_two_chord_values(self):
        assert WINDOW.coefficient(2, 4) == 16
        # The closed-form example for (n=2, i=2) sometimes gets
        # misquoted as 15; the series fixes 30 (and enumeration agrees).
        assert WINDOW.coefficient(2, 5) == 30

    def test_too_few_points_gives_zero(self):
        assert WINDOW.coefficient(3, 3) == 0
        assert WINDOW.coefficient(4, 7) == 0

    def test_out_of_window_lookup_raises(self):
        with pytest.raises(ValueError):
            WINDOW.coefficient(5, 2)
        with pytest.raises(ValueError):
            WINDOW.coefficient(1, 14)

    def test_negative_truncation_rejected(self):
        with pytest.raises(ValueError):
            diagram_series(-1, 3)


class TestClosedForms:
    def test_even_examples(self):
        assert closed_coeff_even(2, 2) == 16
        assert closed_coeff_even(0, 5) == 1
        assert closed_coeff_even(1, 1) == 4 == WINDOW.coefficient(1, 2)

    def test_odd_examples(self):
        assert closed_coeff_odd(1, 1) == 6 == WINDOW.coefficient(1, 3)
        assert closed_coeff_odd(0, 7) == 1
        assert closed_coeff_odd(2, 2) == 30 == WINDOW.coefficient(2, 5)

    def test_odd_domain_error(self):
        with pytest.raises(ValueError):
            closed_coeff_odd(3, 2)

    @given(st.integers(min_value=0, max_value=4), st.integers(min_value=1, max_value=6))
    def test_even_matches_series(self, n, i):
        if 2 * i <= 13:
            assert WINDOW.coefficient(n, 2 * i) == closed_coeff_even(n, i)

    @given(st.integers(min_value=0, max_value=4), st.integers(min_value=0, max_value=6))
    def test_odd_matches_series(self, n, i):
        if i >= n and 2 * i + 1 <= 13:
            assert WINDOW.coefficient(n, 2 * i + 1) == closed_coeff_odd(n, i)

    def test_gamma_ratio_bridge(self):
        # series coefficient at (floor(d/2)+1, 2*floor(d/2)+2+d*k) is the
        # scaled gamma ratio
        for d in range(2, 7):
            half = d // 2
            for k in range(4):
                n, m = half + 1, 2 * half + 2 + d * k
                if n <= 4 and m <= 13:
                    assert WINDOW.coefficient(n, m) == scaled_gamma_ratio(d, k)
