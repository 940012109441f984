"""Build natural and horizontal visibility graphs from a small series.

Every point of an ordered sequence becomes a node. Two points are
naturally visible when the straight chord between them passes strictly
above every intermediate point; they are horizontally visible when every
intermediate value sits strictly below both endpoints. The horizontal
graph is always a subgraph of the natural one.
"""

import numpy as np

from vistree import Criterion, TimeSeries, basic_hvg, basic_nvg, visible_hv, visible_nv

series = TimeSeries.from_values([3.0, 1.0, 4.0, 1.0, 5.0, 9.0, 2.0, 6.0])
print("series:", series.values.tolist())

nvg = basic_nvg(series)
hvg = basic_hvg(series)

print("\nnatural visibility edges:")
for u, v in nvg.edges():
    print(f"  {u} - {v}")

print("\nhorizontal visibility edges:")
for u, v in hvg.edges():
    print(f"  {u} - {v}")

assert set(hvg.edges()) <= set(nvg.edges())
print("\nhorizontal edge set is contained in the natural edge set")

# the pairwise predicates are available directly
a, b = series.point(0), series.point(5)
inner = [series.point(i) for i in range(1, 5)]
print(f"\npoints {a} and {b}:")
print("  naturally visible:  ", visible_nv(a, b, inner))
print("  horizontally visible:", visible_hv(a, b, inner))

# consecutive points always see each other, so both graphs carry the
# Hamiltonian path 0 - 1 - ... - (n-1)
n = len(series)
assert all(nvg.has_edge(i, i + 1) for i in range(n - 1))
print("\nboth graphs contain the consecutive-point path through all nodes")
