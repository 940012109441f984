"""Baseline visibility-graph constructions.

``basic_nvg`` / ``basic_hvg`` evaluate the criterion for every candidate
pair (the natural variant performs exactly n(n-1)/2 pair evaluations; the
horizontal variant stops scanning past the first blocking value).

``dc_build`` is the divide-and-conquer construction: the segment maximum
acts as a wall between its two sides, so only its own visibility within the
segment needs to be established before recursing on the halves.

These serve both as benchmark baselines and as ground truth for the tree
codec in property tests.
"""

from __future__ import annotations

import enum

import numpy as np

from ._kernels import hvg_pair_scan, nvg_pair_scan
from .core import Criterion, TimeSeries, VisibilityGraph


class AlgorithmId(enum.Enum):
    """Selector for the three interchangeable construction algorithms."""

    BASIC = "basic"
    DIVIDE_CONQUER = "dc"
    BST_CODEC = "bst"

    @classmethod
    def parse(cls, text: str) -> "AlgorithmId":
        for a in cls:
            if a.value == text:
                return a
        raise ValueError(f"unknown algorithm {text!r} (expected basic|dc|bst)")


def basic_nvg(series: TimeSeries) -> VisibilityGraph:
    """Natural visibility graph by exhaustive pairwise checking."""
    g = VisibilityGraph(series.indices.tolist())
    if len(series) >= 2:
        eu, ev = nvg_pair_scan(series.indices, series.values)
        g.add_edge_arrays(eu, ev)
    return g


def basic_hvg(series: TimeSeries) -> VisibilityGraph:
    """Horizontal visibility graph with the early-stop rightward scan."""
    g = VisibilityGraph(series.indices.tolist())
    if len(series) >= 2:
        eu, ev = hvg_pair_scan(series.indices, series.values)
        g.add_edge_arrays(eu, ev)
    return g


def dc_build(series: TimeSeries, criterion: Criterion) -> VisibilityGraph:
    """Divide-and-conquer construction; output equals the basic method.

    Ties for the segment maximum break to the smallest index. Work is kept
    on an explicit stack so monotonic inputs cannot overflow the call
    stack. Within a segment, visibility of the maximum against each side
    is a linear sweep keeping the currently steepest blocker (natural) or
    the running maximum value (horizontal); a point is visible exactly when
    it improves on the kept extreme.
    """
    t = series.indices
    y = series.values
    n = len(series)
    g = VisibilityGraph(t.tolist())
    if n < 2:
        return g
    natural = criterion is Criterion.NATURAL
    add_edge = g.add_edge
    stack = [(0, n)]
    while stack:
        lo, hi = stack.pop()
        if hi - lo < 2:
            continue
        m = lo + int(np.argmax(y[lo:hi]))  # first max wins ties
        tm = int(t[m])
        ym = float(y[m])
        if natural:
            w = -1  # position of the flattest (leftward) blocker so far
            for c in range(m - 1, lo - 1, -1):
                if w < 0 or (y[c] - ym) * (t[w] - tm) < (y[w] - ym) * (t[c] - tm):
                    add_edge(int(t[c]), tm)
                    w = c
            w = -1
            for c in range(m + 1, hi):
                if w < 0 or (y[c] - ym) * (t[w] - tm) > (y[w] - ym) * (t[c] - tm):
                    add_edge(tm, int(t[c]))
                    w = c
        else:
            top = -np.inf
            for c in range(m - 1, lo - 1, -1):
                if y[c] > top:
                    add_edge(int(t[c]), tm)
                    top = float(y[c])
            top = -np.inf
            for c in range(m + 1, hi):
                if y[c] > top:
                    add_edge(tm, int(t[c]))
                    top = float(y[c])
        stack.append((lo, m))
        stack.append((m + 1, hi))
    return g
