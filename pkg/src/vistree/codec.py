"""Tree codec for visibility graphs.

A series is encoded into a *maximum binary search tree*: BST-ordered on
indices, max-heap-ordered on values (a Cartesian tree when values are
distinct). The horizontal visibility graph is then fully determined by
structural connectivity rules; the natural visibility graph additionally
requires explicit residual criterion checks between each node and the
not-yet-determined members of its child subtrees.

Trees over disjoint index ranges can be merged, which is what makes online
assimilation of new data batches possible: encode the batch, merge it into
the running tree, decode on demand.

Tie discipline (equal values) is uniform everywhere: within one series the
stable descending sort puts the smaller index first, and the merge resolves
cross-tree ties the same way, so a node "outranks" another exactly when its
value is larger, or the values are equal and its index is smaller. Under
that total order the tree for any point set is unique, and merging two
trees reproduces the tree a scratch encode of the union would build.

All traversals use explicit stacks: monotonic series degenerate the tree
into a line of depth n.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, TextIO

import numpy as np

from .core import DuplicateIndexError, Point, TimeSeries, VisibilityGraph


class HeapViolationError(ValueError):
    """Point insertion would break the max-heap order along its path."""


class BstNode:
    """Tree node: unique integer index (BST key), float value (heap key)."""

    __slots__ = ("index", "value", "left", "right")

    def __init__(self, index: int, value: float):
        self.index = index
        self.value = value
        self.left: Optional[BstNode] = None
        self.right: Optional[BstNode] = None

    def __repr__(self) -> str:
        return f"BstNode({self.index}, {self.value})"


def _outranks(value_a: float, index_a: int, value_b: float, index_b: int) -> bool:
    """Total order used for heap placement: larger value wins, equal values
    go to the smaller index."""
    if value_a != value_b:
        return value_a > value_b
    return index_a < index_b


@dataclass
class CheckCounter:
    """Instrumentation record for one decode."""

    rule_edges: int = 0
    residual_checks: int = 0


class MaxBst:
    """A maximum binary search tree with its node count."""

    __slots__ = ("root", "size")

    def __init__(self, root: Optional[BstNode] = None, size: int = 0):
        self.root = root
        self.size = size

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[BstNode]:
        """Pre-order node traversal."""
        stack = [self.root] if self.root is not None else []
        while stack:
            node = stack.pop()
            yield node
            if node.right is not None:
                stack.append(node.right)
            if node.left is not None:
                stack.append(node.left)

    def height(self) -> int:
        """Longest root-to-leaf edge count; -1 for the empty tree."""
        best = -1
        stack = [(self.root, 0)] if self.root is not None else []
        while stack:
            node, d = stack.pop()
            if d > best:
                best = d
            if node.left is not None:
                stack.append((node.left, d + 1))
            if node.right is not None:
                stack.append((node.right, d + 1))
        return best

    def check_invariants(self) -> None:
        """Raise ValueError unless BST order, heap order, and size hold."""
        count = 0
        stack: list[tuple[BstNode, float, float]] = []
        if self.root is not None:
            stack.append((self.root, -np.inf, np.inf))
        while stack:
            node, lo, hi = stack.pop()
            count += 1
            if not (lo < node.index < hi):
                raise ValueError(f"BST order violated at index {node.index}")
            for child in (node.left, node.right):
                if child is not None and child.value > node.value:
                    raise ValueError(
                        f"heap order violated: {child.index} above parent "
                        f"{node.index}"
                    )
            if node.left is not None:
                stack.append((node.left, lo, node.index))
            if node.right is not None:
                stack.append((node.right, node.index, hi))
        if count != self.size:
            raise ValueError(f"size {self.size} != reachable nodes {count}")


def trees_equal(a: MaxBst, b: MaxBst) -> bool:
    """Structural identity: same shape, same (index, value) at every node."""
    stack = [(a.root, b.root)]
    while stack:
        x, z = stack.pop()
        if x is None or z is None:
            if x is not z:
                return False
            continue
        if x.index != z.index or x.value != z.value:
            return False
        stack.append((x.left, z.left))
        stack.append((x.right, z.right))
    return True


def encode(series: TimeSeries) -> MaxBst:
    """Build the maximum binary search tree of a series.

    Points are stable-sorted by descending value (first index first among
    equals) and inserted in that order by standard BST insertion on the
    index.
    """
    n = len(series)
    if n == 0:
        return MaxBst(None, 0)
    order = np.argsort(-series.values, kind="stable")
    idx = series.indices
    val = series.values
    first = int(order[0])
    root = BstNode(int(idx[first]), float(val[first]))
    for k in range(1, n):
        pos = int(order[k])
        node = BstNode(int(idx[pos]), float(val[pos]))
        i = node.index
        cur = root
        while True:
            if i < cur.index:
                if cur.left is None:
                    cur.left = node
                    break
                cur = cur.left
            else:
                if cur.right is None:
                    cur.right = node
                    break
                cur = cur.right
    return MaxBst(root, n)


def add_point(tree: MaxBst, p: Point) -> MaxBst:
    """Insert one point at the first empty slot along its index path.

    Only valid when the result still satisfies the heap order, i.e. the
    new value does not exceed the value of the node it attaches under;
    otherwise encode the point separately and use :func:`merge`.
    """
    node = BstNode(int(p.index), float(p.value))
    if tree.root is None:
        tree.root = node
        tree.size = 1
        return tree
    cur = tree.root
    while True:
        if node.index == cur.index:
            raise DuplicateIndexError(f"index {node.index} already in tree")
        if node.index < cur.index:
            if cur.left is None:
                parent = cur
                slot = "left"
                break
            cur = cur.left
        else:
            if cur.right is None:
                parent = cur
                slot = "right"
                break
            cur = cur.right
    if node.value > parent.value:
        raise HeapViolationError(
            f"value {node.value} exceeds ancestor value {parent.value}; "
            "merge a single-point tree instead"
        )
    setattr(parent, slot, node)
    tree.size += 1
    return tree


def _split(node: Optional[BstNode], key: int) -> tuple[Optional[BstNode], Optional[BstNode]]:
    """Split a subtree into (indices < key, indices > key).

    Raises DuplicateIndexError if ``key`` itself is present, which is how
    overlapping index sets surface during a merge.
    """
    left_hook = BstNode(0, 0.0)
    right_hook = BstNode(0, 0.0)
    lp, rp = left_hook, right_hook
    cur = node
    while cur is not None:
        if cur.index < key:
            lp.right = cur
            lp = cur
            cur = cur.right
        elif cur.index > key:
            rp.left = cur
            rp = cur
            cur = cur.left
        else:
            raise DuplicateIndexError(f"index {key} present in both trees")
    lp.right = None
    rp.left = None
    return left_hook.right, right_hook.left


def merge(a: MaxBst, b: MaxBst) -> MaxBst:
    """Merge two trees over disjoint index sets into one.

    Works level by level: of the two candidate roots the one that outranks
    the other takes the position; the loser's tree is split by the winner's
    index (detaching any child that belongs on the other side) and the two
    pieces descend into the winner's subtrees. For any pair of inputs this
    rebuilds exactly the tree a scratch encode of the combined series would
    produce.

    Both arguments are consumed: their nodes are rewired into the result.
    """
    if a.root is None:
        return MaxBst(b.root, b.size)
    if b.root is None:
        return MaxBst(a.root, a.size)
    holder = BstNode(0, 0.0)
    # task: merge subtrees (x, z) into parent slot
    stack: list[tuple[Optional[BstNode], Optional[BstNode], BstNode, bool]] = [
        (a.root, b.root, holder, True)
    ]
    while stack:
        x, z, parent, left_side = stack.pop()
        if x is None or z is None:
            winner = x if z is None else z
        else:
            if _outranks(z.value, z.index, x.value, x.index):
                x, z = z, x
            winner = x
            lo, hi = _split(z, x.index)
            stack.append((x.left, lo, x, True))
            stack.append((x.right, hi, x, False))
        if left_side:
            parent.left = winner
        else:
            parent.right = winner
    return MaxBst(holder.left, a.size + b.size)


# --- decoding -------------------------------------------------------------


def _rule_edges_at(node: BstNode) -> tuple[list[int], list[int]]:
    """Edges the connectivity rules determine for one node.

    Returns (connected_indices, spine_indices_walked):

    * every node on the left-most branch of the right child's subtree is
      visible from ``node``;
    * a node on the right-most branch of the left child's subtree is
      visible unless its successor on that branch carries an equal value
      (a run of equal adjacent values exposes only its member nearest the
      viewer: smallest index to the left side, largest to the right side
      and above).
    """
    connected: list[int] = []
    walked: list[int] = []
    c = node.right
    while c is not None:
        connected.append(c.index)
        walked.append(c.index)
        c = c.left
    b = node.left
    while b is not None:
        nxt = b.right
        if nxt is None or nxt.value != b.value:
            connected.append(b.index)
        walked.append(b.index)
        b = nxt
    return connected, walked


def decode_hvg(
    tree: MaxBst, series: TimeSeries, counter: Optional[CheckCounter] = None
) -> VisibilityGraph:
    """Horizontal visibility graph from the encoded tree.

    Fully determined by the connectivity rules; no criterion evaluations.
    """
    g = VisibilityGraph(series.indices.tolist())
    for node in MaxBst(tree.root, tree.size):
        connected, _ = _rule_edges_at(node)
        for j in connected:
            g.add_edge(node.index, j)
        if counter is not None:
            counter.rule_edges += len(connected)
    return g


def _nv_visible_span(t: np.ndarray, y: np.ndarray, pa: int, pb: int) -> bool:
    """Natural-visibility criterion between series positions pa < pb."""
    ta = t[pa]
    ya = y[pa]
    dt = t[pb] - ta
    dy = y[pb] - ya
    for c in range(pa + 1, pb):
        if not ((y[c] - ya) * dt < dy * (t[c] - ta)):
            return False
    return True


def decode_nvg(
    tree: MaxBst, series: TimeSeries, counter: Optional[CheckCounter] = None
) -> VisibilityGraph:
    """Natural visibility graph from the encoded tree.

    Rule-determined edges are emitted as for the horizontal graph (they are
    a subset of the natural graph). Every node is then checked explicitly
    against the members of its child subtrees that the rules did not
    already connect to it; nodes from the left subtree are never checked
    against the right subtree (the parent blocks them). Passing a
    ``CheckCounter`` records one ``residual_checks`` increment per explicit
    criterion evaluation.
    """
    t = series.indices
    y = series.values
    g = VisibilityGraph(t.tolist())
    pos = {int(ix): p for p, ix in enumerate(t.tolist())}
    for node in MaxBst(tree.root, tree.size):
        connected, _ = _rule_edges_at(node)
        for j in connected:
            g.add_edge(node.index, j)
        if counter is not None:
            counter.rule_edges += len(connected)
        done = set(connected)
        p_node = pos[node.index]
        for child in (node.left, node.right):
            sub = [child] if child is not None else []
            while sub:
                d = sub.pop()
                if d.left is not None:
                    sub.append(d.left)
                if d.right is not None:
                    sub.append(d.right)
                if d.index in done:
                    continue
                if counter is not None:
                    counter.residual_checks += 1
                p_d = pos[d.index]
                lo, hi = (p_d, p_node) if p_d < p_node else (p_node, p_d)
                if _nv_visible_span(t, y, lo, hi):
                    g.add_edge(node.index, d.index)
    return g


# --- check-count formulas -------------------------------------------------


def per_node_residual_count(h: int) -> int:
    """Closed-form residual-check count for a node of height h in a
    perfectly balanced tree: 2^(h+1) - 1 - 2h."""
    if h < 0:
        raise ValueError("height must be non-negative")
    return 2 ** (h + 1) - 1 - 2 * h


def residual_check_formula_balanced(h_max: int) -> int:
    """Total residual checks predicted for a perfectly balanced tree of
    height ``h_max``: sum over h = 2..h_max of 2^(h_max-h) * (2^(h+1) - 2h - 1).

    The sum is empty below height 2, so 0 is returned for h_max in {0, 1}.
    """
    if h_max < 0:
        raise ValueError("height must be non-negative")
    return sum(
        2 ** (h_max - h) * (2 ** (h + 1) - 2 * h - 1) for h in range(2, h_max + 1)
    )


# --- debugging snapshot ---------------------------------------------------


def write_tree_snapshot(tree: MaxBst, f: TextIO) -> None:
    """Pre-order dump, one "depth index value" line per node.

    Debugging aid, not a stability-guaranteed interchange format.
    """
    stack = [(tree.root, 0)] if tree.root is not None else []
    while stack:
        node, d = stack.pop()
        f.write(f"{d} {node.index} {node.value!r}\n")
        if node.right is not None:
            stack.append((node.right, d + 1))
        if node.left is not None:
            stack.append((node.left, d + 1))
