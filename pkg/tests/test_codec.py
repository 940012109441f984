import io

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from vistree import (
    CheckCounter,
    Criterion,
    DuplicateIndexError,
    HeapViolationError,
    MaxBst,
    Point,
    TimeSeries,
    add_point,
    balanced_tree_values,
    basic_hvg,
    basic_nvg,
    decode_hvg,
    decode_nvg,
    encode,
    graph_equal,
    merge,
    per_node_residual_count,
    residual_check_formula_balanced,
    trees_equal,
    write_tree_snapshot,
)


def series(values, indices=None):
    vals = [float(v) for v in values]
    if indices is None:
        return TimeSeries.from_values(vals)
    return TimeSeries(indices, vals)


def shape(tree):
    """(index, left-shape, right-shape) nested tuples."""
    def rec(node):
        if node is None:
            return None
        return (node.index, rec(node.left), rec(node.right))
    return rec(tree.root)


class TestEncode:
    def test_rank_positions_example(self):
        # descending-value order visits indices 5, 4, 2, 8
        s = series([2.0, 3.0, 4.0, 1.0], indices=[2, 4, 5, 8])
        t = encode(s)
        assert shape(t) == (5, (4, (2, None, None), None), (8, None, None))

    def test_ramp_degenerates_left(self):
        t = encode(series([1, 2, 3]))
        assert shape(t) == (2, (1, (0, None, None), None), None)

    def test_tie_keeps_first_index_on_top(self):
        t = encode(series([2, 2]))
        assert shape(t) == (0, None, (1, None, None))

    def test_empty(self):
        t = encode(TimeSeries([], []))
        assert t.root is None and len(t) == 0

    @settings(max_examples=200, deadline=None)
    @given(st.lists(st.integers(-10, 10), max_size=50))
    def test_invariants_hold(self, values):
        t = encode(series(values))
        t.check_invariants()
        assert len(t) == len(values)


class TestDecodeHvg:
    def test_valley(self):
        s = series([3, 1, 3])
        assert decode_hvg(encode(s), s).edges() == [(0, 1), (0, 2), (1, 2)]

    def test_line_tree(self):
        s = series([1, 2, 3, 4])
        assert decode_hvg(encode(s), s).edges() == [(0, 1), (1, 2), (2, 3)]

    def test_single_node(self):
        s = series([5])
        g = decode_hvg(encode(s), s)
        assert g.nodes() == [0] and g.edge_count == 0

    def test_equal_value_run_exposes_nearest_member(self):
        # plateau 2,2 inside 3..3: only the run ends see the walls
        s = series([3, 2, 2, 3])
        assert decode_hvg(encode(s), s).edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]


class TestDecodeNvg:
    def test_valley(self):
        s = series([3, 1, 3])
        assert decode_nvg(encode(s), s).edges() == [(0, 1), (0, 2), (1, 2)]

    def test_line_tree_residual_count(self):
        s = series([1, 2, 3, 4, 5])
        counter = CheckCounter()
        decode_nvg(encode(s), s, counter)
        assert counter.residual_checks == 6  # (n-1)(n-2)/2

    def test_single_node_no_checks(self):
        s = series([5])
        counter = CheckCounter()
        g = decode_nvg(encode(s), s, counter)
        assert g.edge_count == 0 and counter.residual_checks == 0

    def test_counter_disabled_by_default(self):
        s = series([1, 2, 3])
        assert graph_equal(decode_nvg(encode(s), s), basic_nvg(s))

    @pytest.mark.parametrize("direction", [1, -1])
    def test_monotonic_worst_case_count(self, direction):
        for n in range(3, 30):
            vals = list(range(1, n + 1))[::direction]
            s = series(vals)
            counter = CheckCounter()
            decode_nvg(encode(s), s, counter)
            assert counter.residual_checks == (n - 1) * (n - 2) // 2

    def test_rule_edges_include_tree_edges(self):
        # the first connectivity rule alone accounts for size-1 pairs
        s = series([5, 3, 8, 1, 9, 2, 7])
        t = encode(s)
        tree_edges = {
            (min(n.index, c.index), max(n.index, c.index))
            for n in t
            for c in (n.left, n.right)
            if c is not None
        }
        assert len(tree_edges) == len(t) - 1
        g = decode_hvg(t, s)
        assert tree_edges <= set(g.edges())


class TestRoundTrip:
    @settings(max_examples=300, deadline=None)
    @given(st.lists(st.integers(-8, 8), max_size=40))
    def test_hv_round_trip(self, values):
        s = series(values)
        assert graph_equal(decode_hvg(encode(s), s), basic_hvg(s))

    @settings(max_examples=300, deadline=None)
    @given(st.lists(st.integers(-8, 8), max_size=40))
    def test_nv_round_trip(self, values):
        s = series(values)
        assert graph_equal(decode_nvg(encode(s), s), basic_nvg(s))

    @pytest.mark.parametrize(
        "values",
        [
            [1, 1, 1, 1],
            [1, 2, 3, 4, 5],
            [5, 4, 3, 2, 1],
            [2, 2, 1, 2, 2],
            [1, 3, 1, 3, 1, 3],
        ],
    )
    def test_degenerate_shapes(self, values):
        s = series(values)
        t = encode(s)
        assert graph_equal(decode_hvg(t, s), basic_hvg(s))
        assert graph_equal(decode_nvg(t, s), basic_nvg(s))


class TestCountFormulas:
    def test_per_node_values(self):
        assert per_node_residual_count(0) == 1
        assert per_node_residual_count(1) == 1
        assert per_node_residual_count(2) == 3

    def test_balanced_formula_values(self):
        assert residual_check_formula_balanced(0) == 0
        assert residual_check_formula_balanced(1) == 0
        assert residual_check_formula_balanced(2) == 3
        assert residual_check_formula_balanced(3) == 15

    def test_balanced_decode_count_tracks_formula(self):
        # The closed form counts one extra check per node of height >= 2
        # (it takes 2^(h+1)-1 as the number of nodes *below* such a node,
        # which includes the node itself). The decoder performs the
        # minimal residual set, so it comes in under the closed form by
        # exactly 2^(h_max-1) - 1.
        for k in range(2, 9):
            s = balanced_tree_values(k)
            t = encode(s)
            h_max = t.height()
            assert h_max == k - 1
            counter = CheckCounter()
            decode_nvg(t, s, counter)
            expected = residual_check_formula_balanced(h_max)
            if h_max >= 2:
                expected -= 2 ** (h_max - 1) - 1
            assert counter.residual_checks == expected


class TestAddPoint:
    def test_into_empty(self):
        t = add_point(MaxBst(), Point(0, 5.0))
        assert shape(t) == (0, None, None) and len(t) == 1

    def test_rightmost_descent(self):
        s = series([3, 1])
        t = add_point(encode(s), Point(2, 0.5))
        assert shape(t) == (0, None, (1, None, (2, None, None)))
        t.check_invariants()

    def test_heap_violation(self):
        with pytest.raises(HeapViolationError):
            add_point(encode(series([3, 1])), Point(2, 9.0))

    def test_duplicate_index(self):
        with pytest.raises(DuplicateIndexError):
            add_point(encode(series([3, 1])), Point(1, 0.5))


class TestMerge:
    def test_append_example(self):
        a = encode(series([1, 2]))
        b = encode(TimeSeries([2], [3.0]))
        m = merge(a, b)
        assert shape(m) == (2, (1, (0, None, None), None), None)
        assert trees_equal(m, encode(series([1, 2, 3])))

    def test_identity_with_empty(self):
        t = encode(series([4, 2, 6]))
        ref = encode(series([4, 2, 6]))
        assert trees_equal(merge(MaxBst(), t), ref)
        assert trees_equal(merge(encode(series([4, 2, 6])), MaxBst()), ref)

    def test_low_value_append_chains_right(self):
        a = encode(series([9, 7, 8]))
        b = encode(TimeSeries([3, 4], [2.0, 1.0]))
        m = merge(a, b)
        assert trees_equal(m, encode(series([9, 7, 8, 2, 1])))
        m.check_invariants()

    def test_duplicate_index_rejected(self):
        a = encode(series([3, 1]))
        b = encode(TimeSeries([1], [0.5]))
        with pytest.raises(DuplicateIndexError):
            merge(a, b)

    @settings(max_examples=200, deadline=None)
    @given(
        st.lists(st.integers(-1000, 1000), min_size=0, max_size=60, unique=True),
        st.data(),
    )
    def test_scratch_identity_any_partition(self, values, data):
        n = len(values)
        full = series(values)
        mask = data.draw(st.lists(st.booleans(), min_size=n, max_size=n))
        ia = [i for i in range(n) if mask[i]]
        ib = [i for i in range(n) if not mask[i]]
        a = TimeSeries(np.array(ia, dtype=np.int64), full.values[ia])
        b = TimeSeries(np.array(ib, dtype=np.int64), full.values[ib])
        m = merge(encode(a), encode(b))
        assert trees_equal(m, encode(full))
        m.check_invariants()

    @settings(max_examples=150, deadline=None)
    @given(st.lists(st.integers(-5, 5), max_size=40), st.data())
    def test_merge_with_ties_still_scratch_identical(self, values, data):
        # equal values across the two trees resolve exactly like the
        # stable descending sort of a scratch encode
        n = len(values)
        full = series(values)
        cut = data.draw(st.integers(0, n))
        a = TimeSeries(full.indices[:cut], full.values[:cut])
        b = TimeSeries(full.indices[cut:], full.values[cut:])
        m = merge(encode(a), encode(b))
        assert trees_equal(m, encode(full))
        s_sorted = full
        assert graph_equal(decode_hvg(m, s_sorted), basic_hvg(full))


class TestSnapshot:
    def test_preorder_lines(self):
        s = series([3, 1, 3])
        buf = io.StringIO()
        write_tree_snapshot(encode(s), buf)
        assert buf.getvalue() == "0 0 3.0\n1 2 3.0\n2 1 1.0\n"

    def test_empty(self):
        buf = io.StringIO()
        write_tree_snapshot(MaxBst(), buf)
        assert buf.getvalue() == ""


class TestInvariantChecking:
    def test_detects_bst_violation(self):
        t = encode(series([5, 3]))
        t.root.right.index = 0
        with pytest.raises(ValueError):
            t.check_invariants()

    def test_detects_heap_violation(self):
        t = encode(series([5, 3]))
        t.root.right.value = 99.0
        with pytest.raises(ValueError):
            t.check_invariants()

    def test_detects_size_mismatch(self):
        t = encode(series([5, 3]))
        t.size = 7
        with pytest.raises(ValueError):
            t.check_invariants()
