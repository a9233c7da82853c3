"""Command-line interface.

Digit words are written either as comma-separated signed integers
("2,1,0" or "-2,0,2") or, when every digit is a single decimal digit, as a
bare digit string ("210"); the empty string is the empty word.  Bases are
written "P/Q", rhythms and labellings as comma-separated integers.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .analysis import (
    build_dfa,
    convert,
    dfa_tree_counterexample,
    flip_check,
    verify_representation_tree,
    verify_value_preservation,
)
from .labelling import Labelling, group_labelling, naive_labelling, special_labelling
from .langops import LabelledTree, representation_tree
from .numeration import DigitWord, RationalBase, evaluate, represent
from .rhythm import Rhythm, christoffel_rhythm
from .treegen import RhythmicTree


def parse_word(text: str) -> DigitWord:
    """Parse a digit-word literal (CSV of signed integers, or bare digits)."""
    text = text.strip()
    if not text:
        return ()
    if "," in text or "-" in text:
        chunks = text.split(",")
        if chunks[-1] == "":  # tolerate one trailing comma ("12," is the word [12])
            chunks.pop()
        try:
            return tuple(int(chunk) for chunk in chunks)
        except ValueError:
            raise ValueError(f"malformed digit word: {text!r}") from None
    if text.isdigit():
        return tuple(int(ch) for ch in text)
    raise ValueError(f"malformed digit word: {text!r}")


def format_word(word: Sequence[int]) -> str:
    """Render a word compactly when all digits are single decimals."""
    if all(0 <= d <= 9 for d in word):
        return "".join(str(d) for d in word)
    return ",".join(str(d) for d in word)


def _resolve_labelling(rhythm: Rhythm, spec: str) -> Labelling:
    if spec == "naive":
        return naive_labelling(rhythm.p)
    if spec == "special":
        return special_labelling(rhythm)
    if spec == "group":
        return group_labelling(rhythm.p, rhythm.q)
    return Labelling.from_string(spec)


def _labelled_tree(args: argparse.Namespace) -> LabelledTree:
    if args.base is not None:
        base = RationalBase.from_string(args.base)
        return representation_tree(base.p, base.q, args.mode)
    rhythm = Rhythm.from_string(args.rhythm)
    labelling = _resolve_labelling(rhythm, args.labelling)
    return LabelledTree(RhythmicTree(rhythm, args.mode), labelling)


def _add_tree_options(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--rhythm", help="rhythm components, e.g. 2,2,1")
    source.add_argument(
        "--base", help="base P/Q: Christoffel rhythm with the group labelling"
    )
    parser.add_argument(
        "--labelling",
        default="naive",
        help="naive, special, group, or explicit digits (default: naive)",
    )
    parser.add_argument(
        "--mode", choices=("tree", "itree"), default="tree",
        help="plain tree or tree with the root loop (default: tree)",
    )


def _cmd_eval(args: argparse.Namespace) -> int:
    base = RationalBase.from_string(args.base)
    print(evaluate(base, parse_word(args.word)))
    return 0


def _cmd_repr(args: argparse.Namespace) -> int:
    base = RationalBase.from_string(args.base)
    if args.number < 0:
        raise ValueError("the number to represent must be non-negative")
    print(format_word(represent(base, args.number)))
    return 0


def _cmd_christoffel(args: argparse.Namespace) -> int:
    base = RationalBase.from_string(args.base)
    rhythm = christoffel_rhythm(base.p, base.q)
    print(f"rhythm: {rhythm}")
    print(f"path: {rhythm.path_word()}")
    return 0


def _cmd_validate_rhythm(args: argparse.Namespace) -> int:
    rhythm = Rhythm.from_string(args.rhythm)
    j = rhythm.first_invalid_index()
    if j is not None:
        print(f"invalid at j={j}", file=sys.stderr)
        return 1
    print("valid")
    return 0


def _cmd_labelling(args: argparse.Namespace) -> int:
    if args.kind == "naive":
        result = naive_labelling(int(args.argument))
    elif args.kind == "special":
        result = special_labelling(Rhythm.from_string(args.argument))
    else:
        base = RationalBase.from_string(args.argument)
        result = group_labelling(base.p, base.q)
    print(result)
    return 0


def _cmd_tree(args: argparse.Namespace) -> int:
    t = _labelled_tree(args)
    node_count = args.count
    if node_count is None and args.max_depth is None:
        node_count = 15
    if args.format == "dot":
        sys.stdout.write(t.to_dot(node_count=node_count, max_depth=args.max_depth))
        return 0
    for n, m in t.tree.bfs_arcs():
        if (node_count is not None and m >= node_count) or (
            args.max_depth is not None and t.tree.depth(m) > args.max_depth
        ):
            break
        print(f"{n} -> {m} [{t.arc_digit_into(m)}]")
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    t = _labelled_tree(args)
    entries = t.enumerate_entries(args.count)
    if args.format == "json":
        payload = [
            {"node": e.node, "word": list(e.word), "value": str(e.value)}
            for e in entries
        ]
        print(json.dumps(payload))
        return 0
    for e in entries:
        print(f"{e.node}\t{format_word(e.word)}\t{e.value}")
    return 0


def _cmd_flip_check(args: argparse.Namespace) -> int:
    t = _labelled_tree(args)
    report = flip_check(t, parse_word(args.u), parse_word(args.v), args.bound)
    if report.bound_exceeded:
        print(f"bound-exceeded {report.bound}")
    else:
        print(f"max-iteration {report.max_iteration}")
    return 0


def _cmd_dfa(args: argparse.Namespace) -> int:
    dfa = build_dfa(Rhythm.from_string(args.rhythm), args.mode)
    if args.format == "dot":
        sys.stdout.write(dfa.to_dot())
    elif args.format == "json":
        print(json.dumps(dfa.to_json_dict()))
    else:
        print(f"states: {' '.join(dfa.states)}")
        print(f"initial: {dfa.initial}")
        for state in dfa.states:
            for digit, target in sorted(dfa.transitions[state].items()):
                print(f"{state} --{digit}--> {target}")
    return 0


def _cmd_convert(args: argparse.Namespace) -> int:
    rhythm = Rhythm.from_string(args.rhythm)
    print(format_word(convert(rhythm, parse_word(args.word))))
    return 0


def _cmd_selftest(args: argparse.Namespace) -> int:
    count = args.count
    checks: list[tuple[str, bool]] = []

    fixtures = christoffel_rhythm(5, 3).components == (2, 2, 1) and christoffel_rhythm(
        3, 2
    ).components == (2, 1)
    checks.append(("christoffel fixtures", fixtures))

    bases = [(3, 2), (5, 3), (7, 4), (7, 3), (10, 3)]
    ok = all(verify_representation_tree(p, q, count) for p, q in bases)
    checks.append((f"representation equivalence ({count} nodes x {len(bases)} bases)", ok))

    rhythms = [(2, 2, 1), (3, 0, 2), (2, 2, 1, 2, 2, 1), (2, 1, 3, 0, 0, 4), (3, 1, 3, 3)]
    ok = all(verify_value_preservation(Rhythm(r), count) for r in rhythms)
    checks.append((f"value preservation ({count} nodes x {len(rhythms)} rhythms)", ok))

    ok = (
        dfa_tree_counterexample(Rhythm((3, 1)), "tree", 12) is None
        and len(build_dfa(Rhythm((3, 1)), "tree").states) == 3
        and len(build_dfa(Rhythm((3, 1)), "itree").states) == 2
    )
    checks.append(("automaton equivalence (length <= 12)", ok))

    failures = 0
    for name, passed in checks:
        print(f"{name}: {'PASS' if passed else 'FAIL'}")
        failures += 0 if passed else 1
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rhythmtree",
        description="Trees, languages and numeration systems generated by rhythms.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("eval", help="value of a digit word in a rational base")
    p.add_argument("--base", required=True, help="base P/Q")
    p.add_argument("word", help="digit word")
    p.set_defaults(handler=_cmd_eval)

    p = sub.add_parser("repr", help="canonical representation of an integer")
    p.add_argument("--base", required=True, help="base P/Q")
    p.add_argument("number", type=int, help="non-negative integer")
    p.set_defaults(handler=_cmd_repr)

    p = sub.add_parser("christoffel", help="Christoffel rhythm and path of a base")
    p.add_argument("base", help="coprime base P/Q")
    p.set_defaults(handler=_cmd_christoffel)

    p = sub.add_parser("validate-rhythm", help="check the tree-infiniteness condition")
    p.add_argument("rhythm", help="rhythm components, e.g. 2,2,1")
    p.set_defaults(handler=_cmd_validate_rhythm)

    p = sub.add_parser("labelling", help="compute a named labelling")
    p.add_argument("kind", choices=("naive", "special", "group"))
    p.add_argument(
        "argument", help="naive: alphabet size P; special: rhythm; group: base P/Q"
    )
    p.set_defaults(handler=_cmd_labelling)

    p = sub.add_parser("tree", help="export a finite prefix of a labelled tree")
    _add_tree_options(p)
    p.add_argument("--count", type=int, default=None, help="number of nodes (default 15)")
    p.add_argument("--max-depth", type=int, default=None, help="depth limit")
    p.add_argument("--format", choices=("dot", "text"), default="dot")
    p.set_defaults(handler=_cmd_tree)

    p = sub.add_parser("enumerate", help="first nodes, words and values in radix order")
    _add_tree_options(p)
    p.add_argument("--count", type=int, default=20, help="number of entries (default 20)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("flip-check", help="iterate u v^i membership up to a bound")
    _add_tree_options(p)
    p.add_argument("u", help="prefix word")
    p.add_argument("v", help="non-empty iterated word")
    p.add_argument("--bound", type=int, default=64, help="iteration bound (default 64)")
    p.set_defaults(handler=_cmd_flip_check)

    p = sub.add_parser("dfa", help="automaton of an integral-growth naive language")
    p.add_argument("--rhythm", required=True, help="rhythm with integral growth ratio")
    p.add_argument("--mode", choices=("tree", "itree"), default="tree")
    p.add_argument("--format", choices=("text", "dot", "json"), default="text")
    p.set_defaults(handler=_cmd_dfa)

    p = sub.add_parser("convert", help="rewrite a word onto the canonical digit alphabet")
    p.add_argument("--rhythm", required=True, help="rhythm whose alphabet the word uses")
    p.add_argument("word", help="digit word over the special-labelling alphabet")
    p.set_defaults(handler=_cmd_convert)

    p = sub.add_parser("selftest", help="run the structural verification drivers")
    p.add_argument("--count", type=int, default=10000, help="nodes per driver (default 10000)")
    p.set_defaults(handler=_cmd_selftest)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
