"""Command-line interface.

Subcommands: generate, build, bench, online-bench, stream. Exit status is
0 on success and nonzero on any error; usage errors exit with 2.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence, TextIO

from . import codec
from .bench import (
    build_graph,
    run_bench,
    run_online_bench,
    summarize,
    write_bench_csv,
    write_online_csv,
)
from .core import (
    Criterion,
    DuplicateIndexError,
    TimeSeries,
    read_series,
    write_edge_list,
    write_series,
)
from .generators import InvalidSpecError, SeriesKind, SeriesSpec, generate
from .reference import AlgorithmId


def _open_out(path: Optional[str]):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w"), True


def _cmd_generate(args) -> int:
    spec = SeriesSpec(SeriesKind.parse(args.kind), args.n, args.seed)
    series = generate(spec)
    out, close = _open_out(args.out)
    try:
        write_series(series, out)
    finally:
        if close:
            out.close()
    return 0


def _cmd_build(args) -> int:
    with open(args.series) as f:
        series = read_series(f)
    algorithm = AlgorithmId.parse(args.algo)
    criterion = Criterion.parse(args.criterion)
    counter = codec.CheckCounter() if args.instrument else None
    graph = build_graph(series, algorithm, criterion, counter)
    out, close = _open_out(args.out)
    try:
        write_edge_list(graph, out)
    finally:
        if close:
            out.close()
    summary = f"nodes={graph.node_count} edges={graph.edge_count}"
    if counter is not None:
        summary += f" residual_checks={counter.residual_checks}"
    # keep the summary off the edge-list stream when that goes to stdout
    print(summary, file=sys.stdout if close else sys.stderr)
    return 0


def _cmd_bench(args) -> int:
    kinds = [SeriesKind.parse(k) for k in (args.kind or ["uniform", "walk", "conway"])]
    sizes = args.n or [1024, 2048, 4096, 8192]
    algorithms = [AlgorithmId.parse(a) for a in (args.algo or ["basic", "dc", "bst"])]
    criteria = [Criterion.parse(c) for c in (args.criterion or ["hvg", "nvg"])]
    records = run_bench(
        kinds,
        sizes,
        args.trials,
        algorithms,
        criteria,
        seed=args.seed,
        instrument=args.instrument,
        check_agreement=not args.no_check,
    )
    out, close = _open_out(args.out)
    try:
        write_bench_csv(records, out)
    finally:
        if close:
            out.close()
    for (alg, crit, kind, n), mean, std in summarize(records):
        print(
            f"{alg:6s} {crit} {kind:10s} n={n:<8d} "
            f"mean={mean:.6f}s std={std:.6f}s",
            file=sys.stderr,
        )
    return 0


def _cmd_online_bench(args) -> int:
    records = run_online_bench(
        args.L or [10000],
        args.N or [10000],
        args.trials,
        seed=args.seed,
        modes=args.mode or ["append", "insert"],
    )
    out, close = _open_out(args.out)
    try:
        write_online_csv(records, out)
    finally:
        if close:
            out.close()
    cells: dict[tuple, list[float]] = {}
    for r in records:
        cells.setdefault((r.L, r.N, r.mode), []).append(r.t_offline_s / r.t_online_s)
    for (L, N, mode), ratios in sorted(cells.items()):
        mean = sum(ratios) / len(ratios)
        print(
            f"L={L:<8d} N={N:<8d} {mode:6s} mean offline/online ratio={mean:.3f}",
            file=sys.stderr,
        )
    return 0


def _cmd_stream(args) -> int:
    batch_size = args.batch_size
    default_criterion = Criterion.parse(args.criterion)
    tree = codec.MaxBst()
    points: list[tuple[int, float]] = []  # all accepted points, unordered
    seen: set[int] = set()
    batch: list[tuple[int, float]] = []
    dirty = False

    def flush() -> None:
        nonlocal tree
        if not batch:
            return
        batch.sort(key=lambda p: p[0])
        series = TimeSeries([p[0] for p in batch], [p[1] for p in batch])
        tree = codec.merge(tree, codec.encode(series))
        batch.clear()

    def emit(criterion: Criterion) -> None:
        nonlocal dirty
        flush()
        ordered = sorted(points)
        series = TimeSeries([p[0] for p in ordered], [p[1] for p in ordered])
        if criterion is Criterion.NATURAL:
            graph = codec.decode_nvg(tree, series)
        else:
            graph = codec.decode_hvg(tree, series)
        write_edge_list(graph, sys.stdout)
        sys.stdout.flush()
        dirty = False

    for lineno, line in enumerate(sys.stdin, 1):
        line = line.strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "emit":
            if len(parts) != 2 or parts[1] not in ("hvg", "nvg"):
                print(f"line {lineno}: bad control line {line!r}", file=sys.stderr)
                continue
            emit(Criterion.parse(parts[1]))
            continue
        if len(parts) != 2:
            print(f"line {lineno}: expected 'index value', skipped", file=sys.stderr)
            continue
        try:
            idx, val = int(parts[0]), float(parts[1])
        except ValueError:
            print(f"line {lineno}: malformed point {line!r}, skipped", file=sys.stderr)
            continue
        if idx in seen:
            print(f"line {lineno}: duplicate index {idx}, skipped", file=sys.stderr)
            continue
        seen.add(idx)
        points.append((idx, val))
        batch.append((idx, val))
        dirty = True
        if len(batch) >= batch_size:
            flush()
    if dirty or not points:
        emit(default_criterion)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vistree",
        description="Visibility graphs from ordered sequences, with an "
        "online-mergeable tree codec.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a synthetic series")
    p.add_argument("--kind", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("build", help="build a visibility graph from a series file")
    p.add_argument("series")
    p.add_argument("--algo", default="bst", choices=["basic", "dc", "bst"])
    p.add_argument("--criterion", default="hvg", choices=["hvg", "nvg"])
    p.add_argument("--out")
    p.add_argument("--instrument", action="store_true")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("bench", help="timed constructions, CSV output")
    p.add_argument("--kind", action="append")
    p.add_argument("--n", type=int, action="append")
    p.add_argument("--algo", action="append", choices=["basic", "dc", "bst"])
    p.add_argument("--criterion", action="append", choices=["hvg", "nvg"])
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--instrument", action="store_true")
    p.add_argument("--no-check", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("online-bench", help="online merge vs offline rebuild timing")
    p.add_argument("--L", type=int, action="append")
    p.add_argument("--N", type=int, action="append")
    p.add_argument("--mode", action="append", choices=["append", "insert"])
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_online_bench)

    p = sub.add_parser("stream", help="assimilate points from stdin in batches")
    p.add_argument("--batch-size", type=int, default=64)
    p.add_argument("--criterion", default="hvg", choices=["hvg", "nvg"])
    p.set_defaults(func=_cmd_stream)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "trials", 1) < 1:
        parser.error("--trials must be >= 1")
    if getattr(args, "batch_size", 1) < 1:
        parser.error("--batch-size must be >= 1")
    try:
        return args.func(args)
    except (
        InvalidSpecError,
        DuplicateIndexError,
        codec.HeapViolationError,
        ValueError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
