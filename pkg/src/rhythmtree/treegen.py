"""Lazy generation of the infinite tree of a valid rhythm.

Nodes are the non-negative integers in breadth-first order; no node objects
exist.  Navigation is closed-form: q consecutive nodes have p consecutive
children, so the least child of n is C(n) = (n div q)*p + s[n mod q] where
s holds the partial sums of the rhythm.  The "itree" mode additionally makes
the root its own first child (the arc 0 -> 0).
"""

from __future__ import annotations

from bisect import bisect_right
from itertools import count
from typing import Callable, Iterator

from .rhythm import Rhythm

MODES = ("tree", "itree")


class RhythmicTree:
    """Infinite ordered tree generated by a valid rhythm."""

    def __init__(self, rhythm: Rhythm, mode: str = "tree"):
        if mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
        j = rhythm.first_invalid_index()
        if j is not None:
            raise ValueError(
                f"rhythm {rhythm} is invalid at index {j}: the generated "
                "tree would be finite"
            )
        self.rhythm = rhythm
        self.mode = mode
        self._sums = rhythm.partial_sums()

    @property
    def p(self) -> int:
        return self.rhythm.p

    @property
    def q(self) -> int:
        return self.rhythm.q

    def children_start(self, n: int) -> int:
        """Least child C(n) of node n, counting the root loop as child 0."""
        if n < 0:
            raise ValueError("nodes are non-negative integers")
        return (n // self.q) * self.p + self._sums[n % self.q]

    def children(self, n: int) -> range:
        """Children of n as a consecutive integer range."""
        start = self.children_start(n)
        end = start + self.rhythm[n % self.q]
        if n == 0 and self.mode == "tree":
            start = 1
        return range(start, end)

    def degree(self, n: int) -> int:
        """Number of children of n."""
        return len(self.children(n))

    def parent(self, m: int) -> int:
        """The unique n with C(n) <= m < C(n+1); parent(0) = 0 in itree mode."""
        if m < 0:
            raise ValueError("nodes are non-negative integers")
        if m == 0:
            if self.mode == "tree":
                raise ValueError("the root has no parent")
            return 0
        block, offset = divmod(m, self.p)
        return block * self.q + bisect_right(self._sums, offset) - 1

    def depth(self, n: int) -> int:
        """Number of arcs on the path from the root to n."""
        depth = 0
        while n != 0:
            n = self.parent(n)
            depth += 1
        return depth

    def bfs_arcs(self) -> Iterator[tuple[int, int]]:
        """Arcs (parent, child) in creation order; an unbounded stream."""
        for n in count(0):
            for m in self.children(n):
                yield (n, m)

    def to_dot(
        self,
        node_count: int | None = None,
        max_depth: int | None = None,
        arc_label: Callable[[int, int], str] | None = None,
    ) -> str:
        """DOT digraph of a finite prefix of the tree.

        Truncates at `node_count` nodes, at depth `max_depth`, or at
        whichever cuts first when both are given.
        """
        return render_dot(self, node_count, max_depth, arc_label)


def render_dot(
    tree: RhythmicTree,
    node_count: int | None = None,
    max_depth: int | None = None,
    arc_label: Callable[[int, int], str] | None = None,
) -> str:
    if node_count is None and max_depth is None:
        raise ValueError("a node_count or max_depth limit is required")
    if node_count is not None and node_count < 1:
        raise ValueError("node_count must be positive")

    nodes = []
    depths = {0: 0}
    for n in count(0):
        if node_count is not None and n >= node_count:
            break
        if n > 0:
            depths[n] = depths[tree.parent(n)] + 1
        if max_depth is not None and depths[n] > max_depth:
            break
        nodes.append(n)
    included = set(nodes)

    lines = ["digraph {", "  rankdir=LR;"]
    for n in nodes:
        lines.append(f"  {n};")
    for n in nodes:
        for m in tree.children(n):
            if m in included:
                label = f' [label="{arc_label(n, m)}"]' if arc_label else ""
                lines.append(f"  {n} -> {m}{label};")
    lines.append("}")
    return "\n".join(lines) + "\n"
