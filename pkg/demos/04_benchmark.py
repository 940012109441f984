"""Run a small instrumented benchmark and fit scaling exponents.

Times all three construction algorithms over a grid of series kinds and
sizes, writes the records as CSV, and fits log-log slopes. The pairwise
baseline scales near n^2 while the tree codec's horizontal decode stays
close to linear for well-behaved inputs.
"""

import io

from vistree import AlgorithmId, Criterion, SeriesKind
from vistree.bench import (
    fit_loglog_slope,
    run_bench,
    summarize,
    write_bench_csv,
)

sizes = [512, 1024, 2048, 4096, 8192]
records = run_bench(
    kinds=[SeriesKind.UNIFORM_NOISE],
    sizes=sizes,
    trials=5,
    algorithms=[AlgorithmId.BASIC, AlgorithmId.DIVIDE_CONQUER, AlgorithmId.BST_CODEC],
    criteria=[Criterion.HORIZONTAL, Criterion.NATURAL],
    seed=0,
)

print("cell means:")
for (algorithm, criterion, kind, n), mean, std in summarize(records):
    print(f"  {algorithm:6s} {criterion} n={n:<6d} {mean * 1e3:9.3f} ms  (+/- {std * 1e3:.3f})")


def slope(algorithm, criterion):
    per_n = {}
    for r in records:
        if r.algorithm == algorithm and r.criterion == criterion:
            per_n.setdefault(r.n, []).append(r.elapsed_s)
    means = [sum(per_n[n]) / len(per_n[n]) for n in sizes]
    return fit_loglog_slope(sizes, means)


print("\nfitted log-log slopes:")
for algorithm in ("basic", "dc", "bst"):
    for criterion in ("hvg", "nvg"):
        print(f"  {algorithm:6s} {criterion}: {slope(algorithm, criterion):.2f}")

buf = io.StringIO()
write_bench_csv(records, buf)
head = "\n".join(buf.getvalue().splitlines()[:5])
print(f"\nCSV output starts with:\n{head}")
