"""Drive the command-line interface end to end.

The CLI mirrors the library: generate writes a series file, build turns
it into an edge list with any algorithm, bench and online-bench emit CSV
timing records, and stream assimilates points from stdin in batches.
"""

import subprocess
import sys
import tempfile
from pathlib import Path

workdir = Path(tempfile.mkdtemp(prefix="vistree-demo-"))
series_path = workdir / "series.txt"
edges_path = workdir / "edges.txt"
bench_path = workdir / "bench.csv"


def cli(*args, stdin=None):
    result = subprocess.run(
        [sys.executable, "-m", "vistree.cli", *args],
        input=stdin,
        capture_output=True,
        text=True,
        check=True,
    )
    return result.stdout, result.stderr


cli("generate", "--kind", "walk", "--n", "12", "--seed", "3", "--out", str(series_path))
print(f"generated series ({series_path}):")
print(series_path.read_text())

out, err = cli("build", str(series_path), "--criterion", "nvg", "--instrument",
               "--out", str(edges_path))
print(f"built natural visibility graph: {out.strip()}")
print(edges_path.read_text())

for algo in ("basic", "dc", "bst"):
    out, _ = cli("build", str(series_path), "--algo", algo)
    print(f"--algo {algo:5s} -> {out.count(chr(10))} edges (identical output)")

cli("bench", "--kind", "uniform", "--n", "256", "--n", "512",
    "--algo", "bst", "--criterion", "hvg", "--trials", "2", "--out", str(bench_path))
print(f"\nbench CSV ({bench_path}):")
print("\n".join(bench_path.read_text().splitlines()[:4]))

stream_input = "0 3\n1 1\n2 3\nemit hvg\n3 4\n"
out, err = cli("stream", "--batch-size", "2", stdin=stream_input)
print("\nstream session (emit after three points, final emit at end of input):")
print(out)
