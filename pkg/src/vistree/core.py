"""Shared data model: time series, visibility predicates, and the graph type.

Two pairwise visibility criteria are supported:

* natural visibility -- the straight chord between two points must pass
  strictly above every intermediate point;
* horizontal visibility -- every intermediate value must lie strictly below
  both endpoint values.

The natural criterion is evaluated in cross-multiplied form so no division
is performed; comparisons are strict with zero tolerance.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, TextIO

import numpy as np


class DuplicateIndexError(ValueError):
    """An index occurs more than once where uniqueness is required."""


@dataclass(frozen=True)
class Point:
    """A single datum: integer time position and real amplitude."""

    index: int
    value: float


class Criterion(enum.Enum):
    """Selector between horizontal and natural visibility."""

    HORIZONTAL = "hvg"
    NATURAL = "nvg"

    @classmethod
    def parse(cls, text: str) -> "Criterion":
        for c in cls:
            if c.value == text:
                return c
        raise ValueError(f"unknown criterion {text!r} (expected 'hvg' or 'nvg')")


class TimeSeries:
    """An ordered numeric sequence: strictly increasing int64 indices with
    finite float64 values.

    Stored as a pair of read-only numpy arrays; instances are immutable.
    """

    __slots__ = ("indices", "values")

    def __init__(self, indices, values):
        idx = np.ascontiguousarray(indices, dtype=np.int64)
        val = np.ascontiguousarray(values, dtype=np.float64)
        if idx.ndim != 1 or val.ndim != 1 or idx.shape != val.shape:
            raise ValueError("indices and values must be 1-d and equally long")
        if not np.all(np.isfinite(val)):
            raise ValueError("values must be finite (no NaN or infinities)")
        if idx.size > 1:
            step = np.diff(idx)
            if np.any(step == 0):
                raise DuplicateIndexError("duplicate index in series")
            if np.any(step < 0):
                raise ValueError("indices must be strictly increasing")
        idx.setflags(write=False)
        val.setflags(write=False)
        self.indices = idx
        self.values = val

    @classmethod
    def from_values(cls, values: Sequence[float], start: int = 0) -> "TimeSeries":
        """Series with consecutive indices ``start, start+1, ...``."""
        val = np.asarray(values, dtype=np.float64)
        return cls(np.arange(start, start + val.size, dtype=np.int64), val)

    @classmethod
    def from_points(cls, points: Iterable[Point]) -> "TimeSeries":
        pts = list(points)
        return cls([p.index for p in pts], [p.value for p in pts])

    def __len__(self) -> int:
        return int(self.indices.size)

    def point(self, pos: int) -> Point:
        return Point(int(self.indices[pos]), float(self.values[pos]))

    def __iter__(self) -> Iterator[Point]:
        for i, v in zip(self.indices.tolist(), self.values.tolist()):
            yield Point(i, v)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TimeSeries):
            return NotImplemented
        return bool(
            np.array_equal(self.indices, other.indices)
            and np.array_equal(self.values, other.values)
        )

    def __repr__(self) -> str:
        return f"TimeSeries(n={len(self)})"


def _normalize(a: Point, b: Point, between: Sequence[Point]):
    if a.index > b.index:
        return b, a, list(reversed(between))
    return a, b, list(between)


def visible_nv(a: Point, b: Point, between: Sequence[Point]) -> bool:
    """True iff every point of ``between`` lies strictly below the chord a-b.

    ``between`` must hold exactly the points with indices strictly between
    ``a`` and ``b``, in index order. Adjacent points (empty ``between``) are
    always visible.
    """
    a, b, mid = _normalize(a, b, between)
    dt = b.index - a.index
    dy = b.value - a.value
    for c in mid:
        # strict inequality, cross-multiplied: y_c below the chord at t_c
        if not ((c.value - a.value) * dt < dy * (c.index - a.index)):
            return False
    return True


def visible_hv(a: Point, b: Point, between: Sequence[Point]) -> bool:
    """True iff every value of ``between`` is strictly below min(y_a, y_b)."""
    a, b, mid = _normalize(a, b, between)
    floor = min(a.value, b.value)
    for c in mid:
        if not (c.value < floor):
            return False
    return True


class VisibilityGraph:
    """Undirected simple graph on integer node labels.

    Adjacency sets keyed by node; no self-loops, no duplicate edges.
    Edge enumeration is emitted in sorted ``(u, v)`` order with ``u < v``
    for reproducible output.
    """

    __slots__ = ("_adj",)

    def __init__(self, nodes: Iterable[int] = ()):
        self._adj: dict[int, set[int]] = {int(u): set() for u in nodes}

    @classmethod
    def from_edges(
        cls, nodes: Iterable[int], edges: Iterable[tuple[int, int]]
    ) -> "VisibilityGraph":
        g = cls(nodes)
        for u, v in edges:
            g.add_edge(u, v)
        return g

    def add_node(self, u: int) -> None:
        self._adj.setdefault(int(u), set())

    def add_edge(self, u: int, v: int) -> None:
        u, v = int(u), int(v)
        if u == v:
            raise ValueError("self-loops are not allowed")
        self._adj.setdefault(u, set()).add(v)
        self._adj.setdefault(v, set()).add(u)

    def add_edge_arrays(self, us, vs) -> None:
        """Bulk insertion from parallel arrays of endpoints."""
        adj = self._adj
        for u, v in zip(us.tolist(), vs.tolist()):
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)

    def nodes(self) -> list[int]:
        return sorted(self._adj)

    @property
    def node_count(self) -> int:
        return len(self._adj)

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self._adj.values()) // 2

    def neighbors(self, u: int) -> frozenset[int]:
        return frozenset(self._adj[int(u)])

    def has_edge(self, u: int, v: int) -> bool:
        return int(v) in self._adj.get(int(u), ())

    def edges(self) -> list[tuple[int, int]]:
        out = [
            (u, v)
            for u, nbrs in self._adj.items()
            for v in nbrs
            if u < v
        ]
        out.sort()
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VisibilityGraph):
            return NotImplemented
        return self._adj == other._adj

    def __repr__(self) -> str:
        return f"VisibilityGraph(nodes={self.node_count}, edges={self.edge_count})"


def graph_equal(g1: VisibilityGraph, g2: VisibilityGraph) -> bool:
    """True iff node sets and edge sets are identical."""
    return g1 == g2


# --- text formats ---------------------------------------------------------
#
# series file:    one "index<SP>value" per line
# edge-list file: one "u<SP>v" per line, u < v, sorted


def write_series(series: TimeSeries, f: TextIO) -> None:
    for i, v in zip(series.indices.tolist(), series.values.tolist()):
        f.write(f"{i} {v!r}\n")


def read_series(f: TextIO) -> TimeSeries:
    pairs: list[tuple[int, float]] = []
    for lineno, line in enumerate(f, 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'index value', got {line!r}")
        try:
            pairs.append((int(parts[0]), float(parts[1])))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    pairs.sort(key=lambda p: p[0])
    if not pairs:
        return TimeSeries([], [])
    if not all(math.isfinite(v) for _, v in pairs):
        raise ValueError("series values must be finite")
    return TimeSeries([i for i, _ in pairs], [v for _, v in pairs])


def write_edge_list(graph: VisibilityGraph, f: TextIO) -> None:
    for u, v in graph.edges():
        f.write(f"{u} {v}\n")


def read_edge_list(f: TextIO) -> VisibilityGraph:
    g = VisibilityGraph()
    for lineno, line in enumerate(f, 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {line!r}")
        g.add_edge(int(parts[0]), int(parts[1]))
    return g
