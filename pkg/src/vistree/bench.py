"""Benchmark harness: timed graph constructions and online-merge timing.

Timing wraps a monotonic clock around the construction call only; series
generation and I/O are excluded. Records round-trip through a small CSV
format whose header is a stable downstream plotting contract.
"""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, TextIO

import numpy as np

from . import codec
from .core import Criterion, TimeSeries, VisibilityGraph, graph_equal
from .generators import RNG_ID, SeriesKind, SeriesSpec, generate
from .reference import AlgorithmId, basic_hvg, basic_nvg, dc_build

BENCH_CSV_HEADER = "algorithm,criterion,kind,n,trial,elapsed_s,residual_checks"
ONLINE_CSV_HEADER = "L,N,mode,trial,t_offline_s,t_online_s"


def build_graph(
    series: TimeSeries,
    algorithm: AlgorithmId,
    criterion: Criterion,
    counter: Optional[codec.CheckCounter] = None,
) -> VisibilityGraph:
    """Construct the visibility graph with the selected algorithm."""
    if algorithm is AlgorithmId.BASIC:
        if criterion is Criterion.NATURAL:
            return basic_nvg(series)
        return basic_hvg(series)
    if algorithm is AlgorithmId.DIVIDE_CONQUER:
        return dc_build(series, criterion)
    tree = codec.encode(series)
    if criterion is Criterion.NATURAL:
        return codec.decode_nvg(tree, series, counter)
    return codec.decode_hvg(tree, series, counter)


@dataclass(frozen=True)
class BenchRecord:
    algorithm: str
    criterion: str
    kind: str
    n: int
    trial: int
    elapsed_s: float
    residual_checks: Optional[int] = None


@dataclass(frozen=True)
class OnlineRatioRecord:
    L: int
    N: int
    mode: str  # "append" or "insert"
    trial: int
    t_offline_s: float
    t_online_s: float


def _trial_seed(base_seed: int, *parts: int) -> np.random.SeedSequence:
    return np.random.SeedSequence([base_seed, *parts])


def _derived_series(kind: SeriesKind, n: int, base_seed: int, trial: int) -> TimeSeries:
    kinds = list(SeriesKind)
    seq = _trial_seed(base_seed, kinds.index(kind), n, trial)
    seed = int(seq.generate_state(1, np.uint64)[0])
    return generate(SeriesSpec(kind, n, seed))


def run_bench(
    kinds: Sequence[SeriesKind],
    sizes: Sequence[int],
    trials: int,
    algorithms: Sequence[AlgorithmId] = tuple(AlgorithmId),
    criteria: Sequence[Criterion] = tuple(Criterion),
    seed: int = 0,
    instrument: bool = False,
    check_agreement: bool = True,
) -> list[BenchRecord]:
    """Timed constructions for every (kind, size, algorithm, criterion, trial).

    When ``check_agreement`` is set and several algorithms run, their
    outputs on the first trial's series of each (kind, size) cell are
    verified equal -- once per cell, outside the timed region, so timing
    stays honest.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    records: list[BenchRecord] = []
    for kind in kinds:
        for n in sizes:
            first_graphs: dict[tuple[str, str], VisibilityGraph] = {}
            for trial in range(trials):
                series = _derived_series(kind, n, seed, trial)
                for algorithm in algorithms:
                    for criterion in criteria:
                        counter = codec.CheckCounter() if instrument else None
                        t0 = time.perf_counter()
                        g = build_graph(series, algorithm, criterion, counter)
                        elapsed = time.perf_counter() - t0
                        records.append(
                            BenchRecord(
                                algorithm.value,
                                criterion.value,
                                kind.value,
                                n,
                                trial,
                                elapsed,
                                counter.residual_checks if counter else None,
                            )
                        )
                        if check_agreement and trial == 0:
                            key = (criterion.value, algorithm.value)
                            first_graphs[key] = g
            if check_agreement and len(algorithms) > 1:
                for criterion in criteria:
                    graphs = [
                        first_graphs[(criterion.value, a.value)] for a in algorithms
                    ]
                    for other in graphs[1:]:
                        if not graph_equal(graphs[0], other):
                            raise AssertionError(
                                f"algorithm disagreement on kind={kind.value} "
                                f"n={n} criterion={criterion.value}"
                            )
    return records


def _partition(
    total: int, batch: int, mode: str, rng: np.random.Generator
) -> tuple[np.ndarray, np.ndarray]:
    """Index sets (existing, batch) for an online scenario."""
    all_idx = np.arange(total, dtype=np.int64)
    if mode == "append":
        return all_idx[: total - batch], all_idx[total - batch :]
    if mode == "insert":
        picked = np.sort(rng.choice(total, size=batch, replace=False))
        mask = np.zeros(total, dtype=bool)
        mask[picked] = True
        return all_idx[~mask], all_idx[mask]
    raise ValueError(f"unknown mode {mode!r}")


def run_online_bench(
    L_values: Sequence[int],
    N_values: Sequence[int],
    trials: int,
    seed: int = 0,
    modes: Sequence[str] = ("append", "insert"),
    verify: bool = True,
) -> list[OnlineRatioRecord]:
    """Compare merging a batch tree into an existing tree against encoding
    the concatenated series from scratch.

    Online time = encode(batch) + merge. Offline time = encode(full).
    With ``verify`` set, each (L, N, mode) cell additionally checks once
    that the merged tree is structurally identical to the scratch tree.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    records: list[OnlineRatioRecord] = []
    for L in L_values:
        for N in N_values:
            if L < 1 or N < 1:
                raise ValueError("L and N must be >= 1")
            for m, mode in enumerate(modes):
                for trial in range(trials):
                    seq = _trial_seed(seed, L, N, m, trial)
                    rng = np.random.default_rng(seq)
                    total = L + N
                    values = rng.random(total)
                    idx_a, idx_b = _partition(total, N, mode, rng)
                    series_a = TimeSeries(idx_a, values[idx_a])
                    series_b = TimeSeries(idx_b, values[idx_b])
                    full = TimeSeries(np.arange(total, dtype=np.int64), values)

                    tree_a = codec.encode(series_a)
                    t0 = time.perf_counter()
                    tree_b = codec.encode(series_b)
                    merged = codec.merge(tree_a, tree_b)
                    t_online = time.perf_counter() - t0

                    t0 = time.perf_counter()
                    scratch = codec.encode(full)
                    t_offline = time.perf_counter() - t0

                    if verify and trial == 0:
                        if not codec.trees_equal(merged, scratch):
                            raise AssertionError(
                                f"merged tree differs from scratch encode "
                                f"(L={L}, N={N}, mode={mode})"
                            )
                        if not graph_equal(
                            codec.decode_hvg(merged, full),
                            codec.decode_hvg(scratch, full),
                        ):
                            raise AssertionError("merged decode mismatch")
                    records.append(
                        OnlineRatioRecord(L, N, mode, trial, t_offline, t_online)
                    )
    return records


# --- CSV ------------------------------------------------------------------


def write_bench_csv(records: Iterable[BenchRecord], f: TextIO) -> None:
    f.write(f"# rng={RNG_ID}\n")
    f.write(BENCH_CSV_HEADER + "\n")
    for r in records:
        checks = "" if r.residual_checks is None else str(r.residual_checks)
        f.write(
            f"{r.algorithm},{r.criterion},{r.kind},{r.n},{r.trial},"
            f"{r.elapsed_s!r},{checks}\n"
        )


def read_bench_csv(f: TextIO) -> list[BenchRecord]:
    records = []
    header_seen = False
    for line in f:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if not header_seen:
            if line != BENCH_CSV_HEADER:
                raise ValueError(f"unexpected CSV header {line!r}")
            header_seen = True
            continue
        alg, crit, kind, n, trial, elapsed, checks = line.split(",")
        records.append(
            BenchRecord(
                alg,
                crit,
                kind,
                int(n),
                int(trial),
                float(elapsed),
                int(checks) if checks else None,
            )
        )
    return records


def write_online_csv(records: Iterable[OnlineRatioRecord], f: TextIO) -> None:
    f.write(f"# rng={RNG_ID}\n")
    f.write(ONLINE_CSV_HEADER + "\n")
    for r in records:
        f.write(
            f"{r.L},{r.N},{r.mode},{r.trial},{r.t_offline_s!r},{r.t_online_s!r}\n"
        )


def read_online_csv(f: TextIO) -> list[OnlineRatioRecord]:
    records = []
    header_seen = False
    for line in f:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if not header_seen:
            if line != ONLINE_CSV_HEADER:
                raise ValueError(f"unexpected CSV header {line!r}")
            header_seen = True
            continue
        L, N, mode, trial, t_off, t_on = line.split(",")
        records.append(
            OnlineRatioRecord(int(L), int(N), mode, int(trial), float(t_off), float(t_on))
        )
    return records


# --- summaries ------------------------------------------------------------


def summarize(records: Iterable[BenchRecord]) -> list[tuple[tuple, float, float]]:
    """Per-(algorithm, criterion, kind, n) mean and sample stdev of elapsed."""
    cells: dict[tuple, list[float]] = {}
    for r in records:
        cells.setdefault((r.algorithm, r.criterion, r.kind, r.n), []).append(
            r.elapsed_s
        )
    out = []
    for key in sorted(cells):
        times = cells[key]
        mean = statistics.fmean(times)
        std = statistics.stdev(times) if len(times) > 1 else 0.0
        out.append((key, mean, std))
    return out


def fit_loglog_slope(ns: Sequence[int], times: Sequence[float]) -> float:
    """Least-squares slope of log(time) against log(n)."""
    x = np.log(np.asarray(ns, dtype=np.float64))
    yv = np.log(np.asarray(times, dtype=np.float64))
    return float(np.polyfit(x, yv, 1)[0])
