"""Deterministic synthetic series generators for tests and benchmarks.

Pseudo-random kinds draw from numpy's PCG64 generator; the algorithm
identifier is exported as :data:`RNG_ID` and recorded in benchmark output
so runs are reproducible across machines.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .core import TimeSeries

RNG_ID = "numpy-pcg64"


class InvalidSpecError(ValueError):
    """Series specification is not satisfiable."""


class SeriesKind(enum.Enum):
    UNIFORM_NOISE = "uniform"
    RANDOM_WALK = "walk"
    CONWAY = "conway"
    MONOTONIC_INCREASING = "increasing"
    MONOTONIC_DECREASING = "decreasing"
    CONSTANT = "constant"
    BALANCED_TREE = "balanced"

    @classmethod
    def parse(cls, text: str) -> "SeriesKind":
        for k in cls:
            if k.value == text:
                return k
        names = ", ".join(k.value for k in cls)
        raise InvalidSpecError(
            f"unknown series kind {text!r} (expected one of: {names})"
        )


@dataclass(frozen=True)
class SeriesSpec:
    kind: SeriesKind
    length: int
    seed: int = 0

    def __post_init__(self):
        if self.length < 0:
            raise InvalidSpecError("length must be >= 0")
        if self.kind is SeriesKind.BALANCED_TREE:
            n = self.length
            if n < 1 or (n + 1) & n != 0:  # must be 2^k - 1
                raise InvalidSpecError(
                    f"balanced kind needs length 2^k - 1, got {n}"
                )


def conway_sequence(n: int) -> list[int]:
    """First ``n`` terms of a(1)=a(2)=1, a(k) = a(a(k-1)) + a(k - a(k-1))."""
    if n <= 0:
        return []
    a = [0] * (n + 1)
    a[1] = 1
    if n >= 2:
        a[2] = 1
    for k in range(3, n + 1):
        prev = a[k - 1]
        a[k] = a[prev] + a[k - prev]
    return a[1:]


def balanced_tree_values(k: int) -> TimeSeries:
    """Series of 2^k - 1 distinct values whose encoding is a perfect tree
    of height k - 1.

    The largest value goes to the middle index and the remaining ranks are
    assigned in breadth-first order over the index-balanced tree, so the
    descending-value insertion order is exactly a level-order build.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    n = 2**k - 1
    values = np.empty(n, dtype=np.float64)
    queue: list[tuple[int, int]] = [(0, n)]
    rank = 0
    while queue:
        nxt: list[tuple[int, int]] = []
        for lo, hi in queue:
            mid = (lo + hi) // 2
            values[mid] = float(n - rank)
            rank += 1
            if mid > lo:
                nxt.append((lo, mid))
            if mid + 1 < hi:
                nxt.append((mid + 1, hi))
        queue = nxt
    return TimeSeries.from_values(values)


def generate(spec: SeriesSpec) -> TimeSeries:
    """Deterministically generate the series described by ``spec``."""
    n = spec.length
    kind = spec.kind
    if kind is SeriesKind.UNIFORM_NOISE:
        rng = np.random.default_rng(np.random.SeedSequence(spec.seed))
        return TimeSeries.from_values(rng.random(n))
    if kind is SeriesKind.RANDOM_WALK:
        rng = np.random.default_rng(np.random.SeedSequence(spec.seed))
        steps = rng.integers(0, 2, size=n) * 2 - 1
        return TimeSeries.from_values(np.cumsum(steps).astype(np.float64))
    if kind is SeriesKind.CONWAY:
        return TimeSeries.from_values(np.asarray(conway_sequence(n), dtype=np.float64))
    if kind is SeriesKind.MONOTONIC_INCREASING:
        return TimeSeries.from_values(np.arange(1, n + 1, dtype=np.float64))
    if kind is SeriesKind.MONOTONIC_DECREASING:
        return TimeSeries.from_values(np.arange(n, 0, -1, dtype=np.float64))
    if kind is SeriesKind.CONSTANT:
        return TimeSeries.from_values(np.ones(n, dtype=np.float64))
    if kind is SeriesKind.BALANCED_TREE:
        return balanced_tree_values((n + 1).bit_length() - 1)
    raise InvalidSpecError(f"unhandled kind {kind}")
