"""The measured operations: dialects, boolean operations, product, star,
reversal, and complement.

Operation outputs are determinized and trimmed to reachable states but
never minimized here; ``automata.complexity`` is the single place where
minimization and occurring-letter reduction happen, so tests can inspect
the raw constructions.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence

from .automata import Dfa, Nfa, complete_over, determinize, union_alphabet
from .errors import InputError
from .transformations import Transformation

BOOL_OPS = ("union", "symdiff", "difference", "intersection")

_TRUTH = {
    "union": lambda a, b: a or b,
    "symdiff": lambda a, b: a != b,
    "difference": lambda a, b: a and not b,
    "intersection": lambda a, b: a and b,
}

DELETED = None  # dialect entry for a deleted letter

LetterMap = Sequence[str | None]


def parse_letter_map(text: str) -> tuple[str | None, ...]:
    """Parse a dialect tuple like "a,-,-,d,e" (optionally parenthesized)."""
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    entries = [part.strip() for part in text.split(",")]
    return tuple(DELETED if e in ("-", "") else e for e in entries)


def format_letter_map(pi: LetterMap) -> str:
    return "(" + ",".join("-" if e is DELETED else e for e in pi) + ")"


def apply_dialect(d: Dfa, pi: LetterMap) -> Dfa:
    """Rename or delete letters positionally over d's alphabet order.

    The k-th alphabet letter maps to the k-th entry of pi; trailing
    omissions delete.  Deleting a letter removes its transitions, so the
    language becomes the words of L(d) that avoid it, renamed letterwise.
    """
    pi = tuple(pi)
    if len(pi) > len(d.alphabet):
        raise InputError(f"dialect has {len(pi)} entries for {len(d.alphabet)} letters")
    pi = pi + (DELETED,) * (len(d.alphabet) - len(pi))
    defined = [t for t in pi if t is not DELETED]
    if len(set(defined)) != len(defined):
        raise InputError(f"dialect targets {defined} are not injective")
    alphabet = tuple(defined)
    delta = {
        target: d.delta[source]
        for source, target in zip(d.alphabet, pi)
        if target is not DELETED
    }
    return Dfa(d.n, alphabet, delta, d.initial, d.finals)


def _product(d1: Dfa, d2: Dfa, op: str) -> Dfa:
    """Reachable part of the direct product; alphabets must agree as sets."""
    decide = _TRUTH[op]
    sigma = d1.alphabet
    start = (d1.initial, d2.initial)
    index = {start: 0}
    order = [start]
    rows: dict[str, list[int]] = {l: [] for l in sigma}
    queue = deque([start])
    while queue:
        p, q = queue.popleft()
        for letter in sigma:
            pair = (d1.delta[letter](p), d2.delta[letter](q))
            if pair not in index:
                index[pair] = len(order)
                order.append(pair)
                queue.append(pair)
            rows[letter].append(index[pair])
    delta = {l: Transformation(tuple(rows[l])) for l in sigma}
    finals = frozenset(
        i for i, (p, q) in enumerate(order) if decide(p in d1.finals, q in d2.finals)
    )
    return Dfa(len(order), sigma, delta, 0, finals)


def boolean_restricted(d1: Dfa, d2: Dfa, op: str) -> Dfa:
    """Direct-product boolean operation for operands over one alphabet.

    The two alphabets must contain the same letters (their orders may
    differ; transitions are aligned by letter name).
    """
    if op not in BOOL_OPS:
        raise InputError(f"unknown boolean operation {op!r}")
    if set(d1.alphabet) != set(d2.alphabet):
        raise InputError(
            f"alphabets {list(d1.alphabet)} and {list(d2.alphabet)} differ; "
            "use the unrestricted mode"
        )
    return _product(d1, d2, op)


def boolean_unrestricted(d1: Dfa, d2: Dfa, op: str) -> Dfa:
    """Boolean operation over the union alphabet, sink-completing each side."""
    if op not in BOOL_OPS:
        raise InputError(f"unknown boolean operation {op!r}")
    sigma = union_alphabet(d1, d2)
    return _product(complete_over(d1, sigma), complete_over(d2, sigma), op)


def concat(d1: Dfa, d2: Dfa) -> Dfa:
    """Product (concatenation) via the epsilon-NFA, determinized.

    Both automata sit side by side over the union alphabet; letters
    missing on one side simply contribute no transitions there.
    """
    sigma = union_alphabet(d1, d2)
    shift = d1.n
    transitions = set()
    for letter in d1.alphabet:
        t = d1.delta[letter]
        transitions.update((p, letter, t(p)) for p in range(d1.n))
    for letter in d2.alphabet:
        t = d2.delta[letter]
        transitions.update((p + shift, letter, t(p) + shift) for p in range(d2.n))
    transitions.update((f, None, d2.initial + shift) for f in d1.finals)
    nfa = Nfa(
        d1.n + d2.n,
        sigma,
        frozenset(transitions),
        frozenset({d1.initial}),
        frozenset(f + shift for f in d2.finals),
    )
    return determinize(nfa)


def star(d: Dfa) -> Dfa:
    """Kleene star: new final initial state copying the old initial's
    outgoing transitions, epsilon moves from old finals back to it."""
    fresh = d.n
    transitions = set()
    for letter in d.alphabet:
        t = d.delta[letter]
        transitions.update((p, letter, t(p)) for p in range(d.n))
        transitions.add((fresh, letter, t(d.initial)))
    transitions.update((f, None, fresh) for f in d.finals)
    nfa = Nfa(
        d.n + 1,
        d.alphabet,
        frozenset(transitions),
        frozenset({fresh}),
        d.finals | {fresh},
    )
    return determinize(nfa)


def reverse(d: Dfa) -> Dfa:
    """Language reversal: flip every transition, swap initial and finals,
    determinize."""
    transitions = set()
    for letter in d.alphabet:
        t = d.delta[letter]
        transitions.update((t(p), letter, p) for p in range(d.n))
    nfa = Nfa(d.n, d.alphabet, frozenset(transitions), d.finals, frozenset({d.initial}))
    return determinize(nfa)


def complement(d: Dfa) -> Dfa:
    return Dfa(d.n, d.alphabet, dict(d.delta), d.initial, frozenset(range(d.n)) - d.finals)
