"""Causal sets, layers, the box operator, and the action."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from causetbox.causet import (
    ActionReport,
    CausalSet,
    gravitational_action,
    box_operator,
    from_relations,
    interval_abundances,
    interval_size,
    layer,
    load_causal_set,
)


def chain(n):
    return from_relations(n, [(k, k + 1) for k in range(n - 1)])


def diamond():
    return from_relations(4, [(0, 1), (0, 2), (1, 3), (2, 3)])


@st.composite
def random_causal_sets(draw):
    n = draw(st.integers(min_value=1, max_value=12))
    pairs = []
    for a in range(n):
        for b in range(a + 1, n):
            if draw(st.booleans()):
                pairs.append((a, b))
    return from_relations(n, pairs)


class TestConstruction:
    def test_closure_is_applied(self):
        causal_set = chain(3)
        assert causal_set.precedes[0, 2]

    def test_diamond_closure(self):
        assert diamond().precedes[0, 3]

    def test_cycle_rejected(self):
        with pytest.raises(ValueError):
            from_relations(2, [(0, 1), (1, 0)])
        with pytest.raises(ValueError):
            from_relations(3, [(0, 1), (1, 2), (2, 0)])

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            from_relations(2, [(0, 5)])

    def test_non_closed_matrix_rejected(self):
        matrix = np.zeros((3, 3), dtype=bool)
        matrix[0, 1] = matrix[1, 2] = True  # missing (0, 2)
        with pytest.raises(ValueError):
            CausalSet(precedes=matrix)

    def test_load_from_dict_and_file(self, tmp_path):
        payload = {"n": 3, "relations": [[0, 1], [1, 2]]}
        assert load_causal_set(payload).precedes[0, 2]
        path = tmp_path / "c.json"
        path.write_text('{"n": 3, "relations": [[0, 1], [1, 2]]}')
        assert load_causal_set(path).precedes[0, 2]
        with pytest.raises(ValueError):
            load_causal_set({"relations": []})


class TestIntervalsAndLayers:
    def test_interval_sizes(self):
        causal_set = chain(3)
        assert interval_size(causal_set, 0, 2) == 3
        assert interval_size(causal_set, 1, 1) == 1
        assert interval_size(causal_set, 2, 0) == 0
        assert interval_size(diamond(), 0, 3) == 4

    def test_chain_layers(self):
        causal_set = chain(3)
        assert layer(causal_set, 2, 1) == {1}
        assert layer(causal_set, 2, 2) == {0}
        assert layer(causal_set, 2, 3) == frozenset()

    def test_diamond_layers(self):
        causal_set = diamond()
        assert layer(causal_set, 3, 1) == {1, 2}
        assert layer(causal_set, 3, 2) == frozenset()
        assert layer(causal_set, 3, 3) == {0}

    def test_antichain_layers_empty(self):
        causal_set = from_relations(4, [])
        assert all(layer(causal_set, x, i) == frozenset() for x in range(4) for i in (1, 2, 3))

    @given(random_causal_sets())
    @settings(max_examples=40, deadline=None)
    def test_layers_partition_the_past(self, causal_set):
        n = causal_set.size
        for x in range(n):
            past = {y for y in range(n) if causal_set.precedes[y, x]}
            layered = set()
            for i in range(1, n + 1):
                current = layer(causal_set, x, i)
                assert current <= past
                assert not current & layered
                layered |= current
            assert layered == past

    @given(random_causal_sets())
    @settings(max_examples=40, deadline=None)
    def test_related_intervals_have_size_at_least_two(self, causal_set):
        n = causal_set.size
        for a in range(n):
            for b in range(n):
                if causal_set.precedes[a, b]:
                    assert interval_size(causal_set, a, b) >= 2


class TestBoxOperator:
    def test_chain_hand_value(self):
        value = box_operator(chain(3), 2, 1.0, np.ones(3), 2)
        assert value == pytest.approx(-6.0, abs=1e-12)

    def test_zero_field(self):
        assert box_operator(diamond(), 2, 1.0, np.zeros(4), 3) == 0.0

    def test_single_element(self):
        value = box_operator(from_relations(1, []), 2, 1.0, [1.0], 0)
        assert value == pytest.approx(-2.0, abs=1e-12)

    def test_length_scale_prefactor(self):
        base = box_operator(chain(3), 2, 1.0, np.ones(3), 2)
        halved = box_operator(chain(3), 2, 2.0, np.ones(3), 2)
        assert halved == pytest.approx(base / 4)

    @given(random_causal_sets(), st.integers(min_value=0, max_value=11))
    @settings(max_examples=25, deadline=None)
    def test_linearity(self, causal_set, x_raw):
        x = x_raw % causal_set.size
        rng = np.random.default_rng(0)
        phi = rng.normal(size=causal_set.size)
        psi = rng.normal(size=causal_set.size)
        lhs = box_operator(causal_set, 2, 1.0, 2.0 * phi - 3.0 * psi, x)
        rhs = 2.0 * box_operator(causal_set, 2, 1.0, phi, x) - 3.0 * box_operator(
            causal_set, 2, 1.0, psi, x
        )
        assert lhs == pytest.approx(rhs, abs=1e-10)

    def test_rejects_bad_field_or_scale(self):
        with pytest.raises(ValueError):
            box_operator(chain(3), 2, 0.0, np.ones(3), 0)
        with pytest.raises(ValueError):
            box_operator(chain(3), 2, 1.0, np.ones(2), 0)


class TestAbundancesAndAction:
    def test_antichain(self):
        causal_set = from_relations(6, [])
        assert interval_abundances(causal_set, 3) == (0, 0, 0)
        assert gravitational_action(causal_set, 2, 1.0).action == pytest.approx(12.0)

    def test_chain(self):
        assert interval_abundances(chain(3), 3) == (2, 1, 0)
        assert gravitational_action(chain(3), 2, 1.0).action == pytest.approx(6.0)

    def test_diamond(self):
        assert interval_abundances(diamond(), 3) == (4, 0, 1)
        assert gravitational_action(diamond(), 2, 1.0).action == pytest.approx(-12.0)

    def test_empty(self):
        report = gravitational_action(from_relations(0, []), 2, 1.0)
        assert report.action == 0.0 and report.size == 0

    def test_report_roundtrip(self):
        report = gravitational_action(diamond(), 4, 0.5)
        assert ActionReport.from_dict(report.to_dict()) == report

    @given(random_causal_sets(), st.sampled_from([2, 4]))
    @settings(max_examples=30, deadline=None)
    def test_action_matches_operator_sum(self, causal_set, d):
        ell = 0.7
        report = gravitational_action(causal_set, d, ell)
        ones = np.ones(causal_set.size)
        total = sum(
            box_operator(causal_set, d, ell, ones, x) for x in range(causal_set.size)
        )
        expected = -(ell ** (d - 2)) * ell**2 * total
        assert report.action == pytest.approx(expected, rel=1e-10, abs=1e-12)
