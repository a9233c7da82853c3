"""Arc labellings of rhythmic trees.

A labelling is a p-tuple of integer digits assigned cyclically: the arc
into node m carries digit gamma[m mod p].  A labelling is valid for a
rhythm when digits strictly increase inside each sibling block, which makes
breadth-first order coincide with radix order on the branch words.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

from .numeration import DigitWord
from .rhythm import Rhythm

KINDS = ("naive", "special", "group", "custom")


@dataclass(frozen=True)
class Labelling:
    """Cyclic digit assignment of period p."""

    gamma: tuple[int, ...]
    kind: str = field(default="custom")

    def __post_init__(self) -> None:
        object.__setattr__(self, "gamma", tuple(int(g) for g in self.gamma))
        if not self.gamma:
            raise ValueError("a labelling needs at least one digit")
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")

    @property
    def p(self) -> int:
        return len(self.gamma)

    @property
    def alphabet(self) -> tuple[int, ...]:
        """Distinct digit values, in increasing order."""
        return tuple(sorted(set(self.gamma)))

    def __getitem__(self, i: int) -> int:
        return self.gamma[i]

    @classmethod
    def from_string(cls, text: str, kind: str = "custom") -> "Labelling":
        try:
            gamma = tuple(int(chunk) for chunk in text.split(","))
        except ValueError:
            raise ValueError(f"malformed labelling literal: {text!r}") from None
        return cls(gamma, kind)

    def __str__(self) -> str:
        return ",".join(str(g) for g in self.gamma)


def naive_labelling(p: int) -> Labelling:
    """The identity labelling (0, 1, ..., p-1)."""
    if p < 2:
        raise ValueError(f"requires p >= 2, got {p}")
    return Labelling(tuple(range(p)), "naive")


def special_labelling(r: Rhythm) -> Labelling:
    """The labelling that makes branch words evaluate to their node index.

    Starting from 0, each digit increases by q', except at positions that
    are non-zero proper partial sums of the rhythm, where it increases by
    q' - p' instead.  Digits may be negative.
    """
    p_red, q_red = r.p_reduced, r.q_reduced
    breakpoints = set(r.partial_sums()[1:-1])
    gamma = [0]
    for i in range(1, r.p):
        step = q_red - p_red if i in breakpoints else q_red
        gamma.append(gamma[-1] + step)
    return Labelling(tuple(gamma), "special")


def group_labelling(p: int, q: int) -> Labelling:
    """Multiples of q modulo p: the orbit of the generator q of Z/pZ."""
    if not (p > q >= 1):
        raise ValueError(f"requires p > q >= 1, got ({p}, {q})")
    if math.gcd(p, q) != 1:
        raise ValueError(f"requires coprime parameters, got ({p}, {q})")
    return Labelling(tuple(i * q % p for i in range(p)), "group")


def is_valid_labelling(r: Rhythm, labelling: Labelling) -> bool:
    """True iff digits strictly increase within every sibling block.

    Blocks are delimited by the partial sums of the rhythm; the labelling
    length must equal the rhythm's component sum.
    """
    if labelling.p != r.p:
        raise ValueError(
            f"labelling length {labelling.p} does not match component sum {r.p}"
        )
    sums = r.partial_sums()
    gamma = labelling.gamma
    for k in range(r.q):
        block = gamma[sums[k] : sums[k + 1]]
        if any(a >= b for a, b in zip(block, block[1:])):
            return False
    return True


def relabel(word: Iterable[int], to: Labelling) -> DigitWord:
    """Letterwise image of a naive-alphabet word under a -> gamma[a]."""
    out = []
    for a in word:
        if not 0 <= a < to.p:
            raise ValueError(f"digit {a} outside [0, {to.p - 1}]")
        out.append(to.gamma[a])
    return tuple(out)
