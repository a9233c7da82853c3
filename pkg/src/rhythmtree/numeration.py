"""Exact arithmetic of rational-base numeration systems.

A base is a pair of integers p > q >= 1.  Digit words are tuples of signed
integers, most-significant digit first; the empty tuple represents 0.  All
operations work on the reduced pair (p', q'), so non-coprime bases behave
exactly like their reduced fraction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

DigitWord = tuple[int, ...]


@dataclass(frozen=True)
class RationalBase:
    """A (possibly non-reduced) base p/q with p > q >= 1."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if not (self.p > self.q >= 1):
            raise ValueError(f"base requires p > q >= 1, got {self.p}/{self.q}")

    @property
    def p_reduced(self) -> int:
        return self.p // math.gcd(self.p, self.q)

    @property
    def q_reduced(self) -> int:
        return self.q // math.gcd(self.p, self.q)

    @property
    def reduced(self) -> tuple[int, int]:
        return (self.p_reduced, self.q_reduced)

    def is_integer_base(self) -> bool:
        return self.q_reduced == 1

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.p, self.q)

    @classmethod
    def from_string(cls, text: str) -> "RationalBase":
        """Parse "P/Q" (or a bare integer "P", meaning P/1)."""
        head, sep, tail = text.strip().partition("/")
        try:
            p = int(head)
            q = int(tail) if sep else 1
        except ValueError:
            raise ValueError(f"malformed base literal: {text!r}") from None
        return cls(p, q)

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


def as_word(digits: Iterable[int]) -> DigitWord:
    """Normalise any iterable of integers into a digit word."""
    word = tuple(int(d) for d in digits)
    return word


def evaluate(base: RationalBase, word: Iterable[int]) -> Fraction:
    """Value of a digit word: the sum of digit/q * (p/q)^position.

    Digits may be arbitrary signed integers; the result need not be an
    integer (words outside the representation language evaluate to proper
    fractions).
    """
    p, q = base.reduced
    value = Fraction(0)
    for digit in word:
        value = value * p / q + Fraction(digit, q)
    return value


def represent(base: RationalBase, n: int) -> DigitWord:
    """Canonical digit word of a non-negative integer, without leading zeros.

    Computed right to left by the modified Euclidean division
    q*N = p*N' + digit, iterated until N reaches 0; represent(0) is the
    empty word.
    """
    if n < 0:
        raise ValueError(f"cannot represent negative integer {n}")
    p, q = base.reduced
    digits = []
    while n > 0:
        scaled = q * n
        digits.append(scaled % p)
        n = scaled // p
    digits.reverse()
    return tuple(digits)


def arc_digit(base: RationalBase, n: int, m: int) -> int | None:
    """Digit on the arc n -> m of the representation tree, or None.

    The arc exists exactly when q'*m - p'*n falls in [0, p'-1]; the root
    self-loop 0 -> 0 carries digit 0.
    """
    if n < 0 or m < 0:
        raise ValueError("nodes are non-negative integers")
    p, q = base.reduced
    a = q * m - p * n
    if 0 <= a < p:
        return a
    return None
