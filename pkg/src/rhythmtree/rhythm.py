"""Rhythms: periodic tree signatures and their lattice-path geometry.

A rhythm is a q-tuple of non-negative integers summing to p, with p > q.
It is the period of a purely periodic breadth-first signature; the pair
(q, p) is its directing parameter and p/q its growth ratio.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate


@dataclass(frozen=True)
class Rhythm:
    """A q-tuple of non-negative integers whose sum p exceeds q."""

    components: tuple[int, ...]

    def __post_init__(self) -> None:
        components = tuple(int(c) for c in self.components)
        object.__setattr__(self, "components", components)
        if not components:
            raise ValueError("a rhythm needs at least one component")
        if any(c < 0 for c in components):
            raise ValueError(f"components must be non-negative: {components}")
        if sum(components) <= len(components):
            raise ValueError(
                f"component sum {sum(components)} must exceed length "
                f"{len(components)} (growth ratio must be > 1)"
            )

    @property
    def q(self) -> int:
        return len(self.components)

    @property
    def p(self) -> int:
        return sum(self.components)

    @property
    def directing_parameter(self) -> tuple[int, int]:
        return (self.q, self.p)

    @property
    def growth_ratio(self) -> Fraction:
        return Fraction(self.p, self.q)

    @property
    def p_reduced(self) -> int:
        return self.p // math.gcd(self.p, self.q)

    @property
    def q_reduced(self) -> int:
        return self.q // math.gcd(self.p, self.q)

    def __getitem__(self, k: int) -> int:
        return self.components[k]

    def partial_sums(self) -> tuple[int, ...]:
        """The q+1 cumulative sums, from 0 up to p."""
        return tuple(accumulate(self.components, initial=0))

    def first_invalid_index(self) -> int | None:
        """Smallest j whose partial sum r_0 + ... + r_j is <= j+1, or None.

        None means the rhythm is valid: every prefix of the signature
        creates strictly more nodes than it consumes, so the generated
        tree is infinite.
        """
        total = 0
        for j, component in enumerate(self.components):
            total += component
            if total <= j + 1:
                return j
        return None

    def is_valid(self) -> bool:
        return self.first_invalid_index() is None

    def path_word(self) -> str:
        """Lattice path over {x, y}: y^r_0 x y^r_1 x ... y^r_{q-1} x."""
        return "".join("y" * component + "x" for component in self.components)

    def e_sequence(self) -> tuple[int, ...]:
        """Scaled gaps q*(r_0 + ... + r_{k-1}) - k*p for k in [0, q-1]."""
        sums = self.partial_sums()
        return tuple(self.q * sums[k] - k * self.p for k in range(self.q))

    @classmethod
    def from_string(cls, text: str) -> "Rhythm":
        """Parse a comma-separated rhythm literal such as "2,2,1"."""
        try:
            components = tuple(int(chunk) for chunk in text.split(","))
        except ValueError:
            raise ValueError(f"malformed rhythm literal: {text!r}") from None
        return cls(components)

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.components)


def christoffel_rhythm(p: int, q: int) -> Rhythm:
    """The rhythm whose path is the upper Christoffel word of slope p/q.

    Its k-th partial sum is ceil(k*p/q), the tightest integer approximation
    of the slope line from above, so component k is
    ceil((k+1)*p/q) - ceil(k*p/q).  Requires coprime p > q >= 1.
    """
    if not (p > q >= 1):
        raise ValueError(f"requires p > q >= 1, got ({p}, {q})")
    if math.gcd(p, q) != 1:
        raise ValueError(f"requires coprime parameters, got ({p}, {q})")
    ceilings = [-(-k * p // q) for k in range(q + 1)]
    return Rhythm(tuple(ceilings[k + 1] - ceilings[k] for k in range(q)))
