"""Compiled inner loops for the exhaustive pairwise baselines.

The arithmetic here must stay bit-identical to the predicates in
:mod:`vistree.core`: natural visibility uses the same cross-multiplied
strict comparison, horizontal visibility uses raw value comparisons.
Output buffers are sized up front; reallocating inside the hot loop
defeats the compiler's optimizations.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def _nvg_count(t, y):
    n = t.shape[0]
    m = 0
    for a in range(n):
        ta = t[a]
        ya = y[a]
        vy = 0.0
        vt = np.int64(0)
        for b in range(a + 1, n):
            dy = y[b] - ya
            dt = t[b] - ta
            if vt == 0 or vy * dt < dy * vt:
                m += 1
                vy = dy
                vt = dt
    return m


@njit(cache=True)
def nvg_pair_scan(t, y):
    """All naturally-visible pairs; one criterion evaluation per pair.

    b is visible from a exactly when its chord slope strictly beats every
    intermediate's, so carrying the steepest chord seen so far (numerator
    vy, denominator vt) reduces each pair to one cross-multiplied
    comparison. Counting pass first, then an identical filling pass.

    Returns parallel arrays of edge endpoints (node labels, u < v).
    """
    n = t.shape[0]
    total = _nvg_count(t, y)
    eu = np.empty(total, np.int64)
    ev = np.empty(total, np.int64)
    m = 0
    for a in range(n):
        ta = t[a]
        ya = y[a]
        vy = 0.0
        vt = np.int64(0)
        for b in range(a + 1, n):
            dy = y[b] - ya
            dt = t[b] - ta
            if vt == 0 or vy * dt < dy * vt:
                eu[m] = ta
                ev[m] = t[b]
                m += 1
                vy = dy
                vt = dt
    return eu, ev


@njit(cache=True)
def hvg_pair_scan(t, y):
    """All horizontally-visible pairs.

    Scans rightward from each point, stopping at the first value >= the
    current value (no later point can be horizontally visible past it).
    A horizontal visibility graph has at most 2n - 3 edges, so the output
    buffers never need to grow.
    """
    n = t.shape[0]
    cap = 2 * n + 4
    eu = np.empty(cap, np.int64)
    ev = np.empty(cap, np.int64)
    m = 0
    for a in range(n):
        ya = y[a]
        top = -np.inf  # running max of the values strictly between a and b
        for b in range(a + 1, n):
            if top < ya and top < y[b]:
                eu[m] = t[a]
                ev[m] = t[b]
                m += 1
            if y[b] >= ya:
                break
            if y[b] > top:
                top = y[b]
    return eu[:m], ev[:m]
