"""Branch languages of labelled rhythmic trees.

A labelled tree pairs a rhythmic tree with a valid labelling; its branch
language is the prefix-closed set of words labelling root-to-node paths,
enumerated in radix order by breadth-first search.  Navigation is O(1) per
digit: with the special labelling the target node solves the arc equation
digit = q'*m - p'*n, and otherwise each digit value pins down its possible
residues modulo p inside a node's (consecutive) child interval.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .labelling import Labelling, is_valid_labelling, group_labelling, naive_labelling, special_labelling
from .numeration import DigitWord, RationalBase, evaluate
from .rhythm import Rhythm, christoffel_rhythm
from .treegen import RhythmicTree, render_dot


@dataclass(frozen=True)
class BranchEntry:
    """One enumerated node: its index, branch word, and exact value."""

    node: int
    word: DigitWord
    value: Fraction


class LabelledTree:
    """A rhythmic tree whose arcs carry digits from a valid labelling."""

    def __init__(self, tree: RhythmicTree, labelling: Labelling):
        if not is_valid_labelling(tree.rhythm, labelling):
            raise ValueError(
                f"labelling {labelling} is not valid for rhythm {tree.rhythm}: "
                "digits must strictly increase within each sibling block"
            )
        self.tree = tree
        self.labelling = labelling
        self.base = RationalBase(tree.rhythm.p, tree.rhythm.q)
        # Digit value -> cyclic positions carrying it; at most one position
        # can land inside any single child interval.
        positions: dict[int, list[int]] = defaultdict(list)
        for i, g in enumerate(labelling.gamma):
            positions[g].append(i)
        self._positions = {digit: tuple(pos) for digit, pos in positions.items()}
        self._arc_equation = labelling.gamma == special_labelling(tree.rhythm).gamma

    @property
    def rhythm(self) -> Rhythm:
        return self.tree.rhythm

    @property
    def mode(self) -> str:
        return self.tree.mode

    def arc_digit_into(self, m: int) -> int:
        """Digit carried by the unique arc entering node m."""
        return self.labelling.gamma[m % self.labelling.p]

    def step(self, n: int, digit: int) -> int | None:
        """Child of n reached by one digit, or None if no arc matches."""
        children = self.tree.children(n)
        if self._arc_equation:
            p_red, q_red = self.base.reduced
            scaled = p_red * n + digit
            if scaled % q_red != 0:
                return None
            m = scaled // q_red
            return m if m in children else None
        if len(children) == 0:
            return None
        lo, hi = children.start, children.stop - 1
        for i in self._positions.get(digit, ()):
            m = lo + (i - lo) % self.labelling.p
            if m <= hi:
                return m
        return None

    def navigate(self, word: Iterable[int]) -> int | None:
        """Node reached from the root along a digit word, or None."""
        node = 0
        for digit in word:
            node = self.step(node, digit)
            if node is None:
                return None
        return node

    def __contains__(self, word: Iterable[int]) -> bool:
        return self.navigate(word) is not None

    def repr_word(self, n: int) -> DigitWord:
        """Branch word of node n: the digits from the root down to n."""
        if n < 0:
            raise ValueError("nodes are non-negative integers")
        digits = []
        while n != 0:
            digits.append(self.arc_digit_into(n))
            n = self.tree.parent(n)
        digits.reverse()
        return tuple(digits)

    def value(self, n: int) -> Fraction:
        """Exact value of the branch word of n in base p'/q'."""
        return evaluate(self.base, self.repr_word(n))

    def branching_digits(self, n: int) -> list[int]:
        """Digits of the arcs leaving n, in sibling order."""
        return [self.arc_digit_into(m) for m in self.tree.children(n)]

    def enumerate_entries(self, count: int) -> list[BranchEntry]:
        """Entries for nodes 0..count-1 in breadth-first (radix) order."""
        if count < 1:
            raise ValueError("count must be positive")
        p_red, q_red = self.base.reduced
        entries = [BranchEntry(0, (), Fraction(0))]
        for n in range(1, count):
            parent = entries[self.tree.parent(n)]
            digit = self.arc_digit_into(n)
            value = parent.value * p_red / q_red + Fraction(digit, q_red)
            entries.append(BranchEntry(n, parent.word + (digit,), value))
        return entries

    def to_dot(self, node_count: int | None = None, max_depth: int | None = None) -> str:
        """DOT digraph of a finite prefix, arcs labelled with their digits."""
        return render_dot(
            self.tree,
            node_count,
            max_depth,
            arc_label=lambda n, m: str(self.arc_digit_into(m)),
        )


def naive_tree(rhythm: Rhythm, mode: str = "tree") -> LabelledTree:
    """The tree of `rhythm` with digits 0..p-1 assigned cyclically."""
    return LabelledTree(RhythmicTree(rhythm, mode), naive_labelling(rhythm.p))


def special_tree(rhythm: Rhythm, mode: str = "tree") -> LabelledTree:
    """The tree of `rhythm` with its special labelling: words evaluate to nodes."""
    return LabelledTree(RhythmicTree(rhythm, mode), special_labelling(rhythm))


def representation_tree(p: int, q: int, mode: str = "tree") -> LabelledTree:
    """The tree of canonical p/q-representations of the integers.

    Built from the Christoffel rhythm of slope p/q and the labelling by
    multiples of q modulo p; requires coprime p > q >= 1.
    """
    return LabelledTree(
        RhythmicTree(christoffel_rhythm(p, q), mode), group_labelling(p, q)
    )
