"""Trees and prefix-closed languages generated by periodic signatures.

The package builds infinite ordered trees from rhythms (finite tuples of
node degrees repeated periodically), labels their arcs with digits, and
studies the resulting branch languages: canonical and non-canonical
representations of the integers in rational bases, their radix-order
enumeration, the finite automata that exist exactly when the growth ratio
is an integer, and the iteration behaviour that rules automata out
otherwise.
"""

from .analysis import (
    Dfa,
    FlipReport,
    build_dfa,
    convert,
    dfa_tree_counterexample,
    fibonacci_prefixes,
    flip_check,
    pumpable_pair,
    verify_arc_identity,
    verify_representation_tree,
    verify_value_preservation,
)
from .labelling import (
    Labelling,
    group_labelling,
    is_valid_labelling,
    naive_labelling,
    relabel,
    special_labelling,
)
from .langops import (
    BranchEntry,
    LabelledTree,
    naive_tree,
    representation_tree,
    special_tree,
)
from .numeration import DigitWord, RationalBase, arc_digit, evaluate, represent
from .rhythm import Rhythm, christoffel_rhythm
from .treegen import RhythmicTree

__all__ = [
    "BranchEntry",
    "Dfa",
    "DigitWord",
    "FlipReport",
    "Labelling",
    "LabelledTree",
    "RationalBase",
    "Rhythm",
    "RhythmicTree",
    "arc_digit",
    "build_dfa",
    "christoffel_rhythm",
    "convert",
    "dfa_tree_counterexample",
    "evaluate",
    "fibonacci_prefixes",
    "flip_check",
    "group_labelling",
    "is_valid_labelling",
    "naive_labelling",
    "naive_tree",
    "pumpable_pair",
    "relabel",
    "represent",
    "representation_tree",
    "special_labelling",
    "special_tree",
    "verify_arc_identity",
    "verify_representation_tree",
    "verify_value_preservation",
]
