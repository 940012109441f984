"""Shared helpers: exact brute-force oracles independent of the library
construction paths.

The natural-visibility oracle evaluates the chord inequality in exact
rational arithmetic (fractions), so it is correct for any float input and
bit-agrees with the library's cross-multiplied float comparison whenever
values are integer-valued.
"""

from fractions import Fraction

import pytest

from vistree import TimeSeries, VisibilityGraph


def naive_visible_nv(a, b, between) -> bool:
    ya, yb = Fraction(a.value), Fraction(b.value)
    for c in between:
        chord = ya + (yb - ya) * Fraction(c.index - a.index, b.index - a.index)
        if not (Fraction(c.value) < chord):
            return False
    return True


def naive_visible_hv(a, b, between) -> bool:
    floor = min(a.value, b.value)
    return all(c.value < floor for c in between)


def naive_graph(series: TimeSeries, horizontal: bool) -> VisibilityGraph:
    """O(n^3) triple loop straight off the visibility definitions."""
    pts = list(series)
    g = VisibilityGraph(series.indices.tolist())
    pred = naive_visible_hv if horizontal else naive_visible_nv
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if pred(pts[i], pts[j], pts[i + 1 : j]):
                g.add_edge(pts[i].index, pts[j].index)
    return g


@pytest.fixture
def naive():
    return naive_graph
