"""Structural analysis of rhythmic languages.

Integral growth ratio makes the naive-labelled branch language regular: the
nodes of the tree collapse to their residue classes modulo q, giving a
finite automaton.  Non-integral growth makes the language defeat every
pumping argument (finite left iteration); that cannot be decided by
testing, so the checker here reports bounded evidence only.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .langops import LabelledTree, naive_tree, representation_tree, special_tree
from .numeration import DigitWord, RationalBase, evaluate, represent
from .rhythm import Rhythm
from .treegen import MODES, RhythmicTree


@dataclass(frozen=True)
class Dfa:
    """Deterministic automaton over integer digits; every state accepts."""

    states: tuple[str, ...]
    initial: str
    transitions: dict[str, dict[int, str]]

    @property
    def alphabet(self) -> tuple[int, ...]:
        digits = {d for arcs in self.transitions.values() for d in arcs}
        return tuple(sorted(digits))

    def accepts(self, word: Iterable[int]) -> bool:
        """Run the word from the initial state; all states are accepting."""
        state = self.initial
        for digit in word:
            nxt = self.transitions[state].get(digit)
            if nxt is None:
                return False
            state = nxt
        return True

    def to_json_dict(self) -> dict:
        triples = [
            [state, digit, target]
            for state in self.states
            for digit, target in sorted(self.transitions[state].items())
        ]
        return {"states": list(self.states), "initial": self.initial, "transitions": triples}

    def to_dot(self) -> str:
        lines = ["digraph {", "  rankdir=LR;", '  __start [shape=none, label=""];']
        for state in self.states:
            lines.append(f'  "{state}" [shape=doublecircle];')
        lines.append(f'  __start -> "{self.initial}";')
        for state in self.states:
            for digit, target in sorted(self.transitions[state].items()):
                lines.append(f'  "{state}" -> "{target}" [label="{digit}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_dfa(rhythm: Rhythm, mode: str = "tree") -> Dfa:
    """Finite automaton of the naive-labelled branch language of `rhythm`.

    Requires an integral growth ratio (q divides p); positive nodes that
    are congruent modulo q accept the same words, so one state per residue
    class suffices, plus a separate initial state in tree mode (the root
    lacks the loop arc).  Rejects non-integral growth: those branch
    languages contain no infinite regular subset, so no automaton exists.
    """
    if rhythm.q_reduced != 1:
        raise ValueError(
            f"growth ratio {rhythm.p}/{rhythm.q} is not an integer: the "
            "branch language is not regular and has no finite automaton"
        )
    tree = RhythmicTree(rhythm, "itree")
    p, q = rhythm.p, rhythm.q

    def class_name(node: int) -> str:
        return f"c{node % q}"

    transitions: dict[str, dict[int, str]] = {}
    for c in range(q):
        representative = c if c > 0 else q
        arcs: dict[int, str] = {}
        for m in tree.children(representative):
            digit = m % p
            assert digit not in arcs, "sibling digits must be distinct"
            arcs[digit] = class_name(m)
        transitions[class_name(c)] = arcs

    if mode == "itree":
        states = tuple(class_name(c) for c in range(q))
        return Dfa(states, "c0", transitions)
    if mode != "tree":
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    root_arcs = {m % p: class_name(m) for m in range(1, rhythm[0])}
    transitions["init"] = root_arcs
    states = ("init",) + tuple(class_name(c) for c in range(q))
    return Dfa(states, "init", transitions)


@dataclass(frozen=True)
class FlipReport:
    """Outcome of iterating u v^i membership up to a bound.

    max_iteration = i means u v^i is in the language and u v^(i+1) is not;
    None means u v^bound is still a member (the bound was exceeded).
    """

    u: DigitWord
    v: DigitWord
    bound: int
    max_iteration: int | None

    @property
    def bound_exceeded(self) -> bool:
        return self.max_iteration is None


def flip_check(t: LabelledTree, u: Iterable[int], v: Iterable[int], bound: int = 64) -> FlipReport:
    """Largest i <= bound with u v^i in the branch language of t.

    Branch languages are prefix-closed, so "u v^i is a prefix of a member"
    reduces to plain membership.  A finite bound can refute but never
    certify that only finitely many i survive.
    """
    u, v = tuple(u), tuple(v)
    if len(v) == 0:
        raise ValueError("the iterated word v must be non-empty")
    if bound < 1:
        raise ValueError("bound must be positive")
    node = t.navigate(u)
    if node is None:
        raise ValueError(f"u = {u} is not in the branch language")
    for i in range(bound):
        for digit in v:
            node = t.step(node, digit)
            if node is None:
                return FlipReport(u, v, bound, max_iteration=i)
    return FlipReport(u, v, bound, max_iteration=None)


def convert(rhythm: Rhythm, word: Iterable[int]) -> DigitWord:
    """Rewrite a word over the special-labelling alphabet into canonical digits.

    Evaluates the word exactly in base p'/q' and re-represents the value,
    so the result is value-preserving by construction.  Words that do not
    evaluate to a non-negative integer have no canonical counterpart.
    """
    word = tuple(word)
    base = RationalBase(rhythm.p, rhythm.q)
    value = evaluate(base, word)
    if value.denominator != 1 or value < 0:
        raise ValueError(
            f"word {word} evaluates to {value}, not a non-negative integer"
        )
    return represent(base, int(value))


def dfa_tree_counterexample(
    rhythm: Rhythm, mode: str = "tree", max_len: int = 12
) -> DigitWord | None:
    """Shortest word (up to max_len) where automaton and tree disagree.

    Explores the product of the automaton with the naive-labelled tree,
    treating a missing transition on either side as a dead state.  Once
    both sides are dead they agree forever, so the search only expands
    live pairs; None certifies agreement on every word of length <= max_len.
    """
    dfa = build_dfa(rhythm, mode)
    tree = naive_tree(rhythm, mode)
    alphabet = range(rhythm.p)

    start = (dfa.initial, 0)
    seen = {start}
    queue: deque[tuple[str, int, DigitWord]] = deque([(dfa.initial, 0, ())])
    while queue:
        state, node, word = queue.popleft()
        if len(word) == max_len:
            continue
        for digit in alphabet:
            next_state = dfa.transitions[state].get(digit)
            next_node = tree.step(node, digit)
            if (next_state is None) != (next_node is None):
                return word + (digit,)
            if next_state is None:
                continue
            pair = (next_state, next_node)
            if pair not in seen:
                seen.add(pair)
                queue.append((next_state, next_node, word + (digit,)))
    return None


def pumpable_pair(dfa: Dfa) -> tuple[DigitWord, DigitWord]:
    """Words (u, v) with u v^i accepted for every i, found via a cycle.

    u reaches some state s from the initial state and v loops on s; every
    infinite regular language has such a pair.
    """
    access: dict[str, DigitWord] = {dfa.initial: ()}
    order = [dfa.initial]
    queue = deque([dfa.initial])
    while queue:
        state = queue.popleft()
        for digit, target in sorted(dfa.transitions[state].items()):
            if target not in access:
                access[target] = access[state] + (digit,)
                order.append(target)
                queue.append(target)

    for state in order:
        cycle = _shortest_cycle(dfa, state)
        if cycle is not None:
            return (access[state], cycle)
    raise ValueError("automaton has no cycle: its language is finite")


def _shortest_cycle(dfa: Dfa, state: str) -> DigitWord | None:
    paths: dict[str, DigitWord] = {}
    queue: deque[str] = deque()
    for digit, target in sorted(dfa.transitions[state].items()):
        if target == state:
            return (digit,)
        if target not in paths:
            paths[target] = (digit,)
            queue.append(target)
    while queue:
        current = queue.popleft()
        for digit, target in sorted(dfa.transitions[current].items()):
            if target == state:
                return paths[current] + (digit,)
            if target not in paths:
                paths[target] = paths[current] + (digit,)
                queue.append(target)
    return None


def fibonacci_prefixes(k: int) -> list[DigitWord]:
    """First k iterates of the Fibonacci morphism 0 -> 01, 1 -> 0 on 0.

    The resulting words over {0, 1} form a prefix chain whose limit avoids
    fourth powers; they make a handy fixture for iteration checks.
    """
    if k < 1:
        raise ValueError("k must be positive")
    images = {0: (0, 1), 1: (0,)}
    words = [(0,)]
    for _ in range(k - 1):
        words.append(tuple(d for digit in words[-1] for d in images[digit]))
    return words


def verify_representation_tree(p: int, q: int, count: int) -> bool:
    """Branch words of the Christoffel-rhythm tree with the group labelling
    equal the canonical p/q-representations for every node below count."""
    base = RationalBase(p, q)
    entries = representation_tree(p, q).enumerate_entries(count)
    return all(entry.word == represent(base, n) for n, entry in enumerate(entries))


def verify_value_preservation(rhythm: Rhythm, count: int) -> bool:
    """Branch words of the special-labelled tree evaluate exactly to their
    node index for every node below count."""
    entries = special_tree(rhythm).enumerate_entries(count)
    return all(entry.value == entry.node for entry in entries)


def verify_arc_identity(rhythm: Rhythm, count: int) -> bool:
    """Every arc n -> m with m below count in the special-labelled tree
    carries exactly the digit q'*m - p'*n."""
    t = special_tree(rhythm)
    p_red, q_red = rhythm.p_reduced, rhythm.q_reduced
    for m in range(1, count):
        n = t.tree.parent(m)
        if t.arc_digit_into(m) != q_red * m - p_red * n:
            return False
    return True
