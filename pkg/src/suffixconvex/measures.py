"""Semigroup enumeration, quotient complexities, and atoms.

Atom non-emptiness and complexity both run on the image-pair automaton:
the quotient of the atom A_S by a word w is determined by the pair
(Sw, S'w) where S' is the complement of S, a pair is accepting when Sw
lies inside the final states and S'w avoids them, and a pair whose
components overlap can never accept again and is pruned to a sink.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, replace

from .automata import Dfa, minimize
from .errors import InputError, LimitError
from .transformations import Transformation

DEFAULT_SEMIGROUP_CAP = 2_000_000
DEFAULT_ATOM_STATE_LIMIT = 12

AtomKey = frozenset


@dataclass(frozen=True)
class SemigroupSummary:
    """Size of a transformation semigroup; a truncated size is only a
    lower bound."""

    size: int
    generators: dict[str, Transformation]
    truncated: bool


def transition_semigroup(d: Dfa, cap: int = DEFAULT_SEMIGROUP_CAP) -> SemigroupSummary:
    """Closure of the letter transformations under composition.

    Breadth-first over words by length then alphabet order; stops early,
    flagging truncation, once cap distinct elements have been found and
    more exist.
    """
    generators = {letter: d.delta[letter] for letter in d.alphabet}
    gen_images = [d.delta[letter].image for letter in d.alphabet]
    seen: set[tuple[int, ...]] = set()
    queue: deque[tuple[int, ...]] = deque()
    truncated = False
    for image in gen_images:
        if image not in seen:
            seen.add(image)
            queue.append(image)
    while queue and not truncated:
        current = queue.popleft()
        for gen in gen_images:
            composed = tuple(gen[q] for q in current)
            if composed in seen:
                continue
            if len(seen) >= cap:
                truncated = True
                break
            seen.add(composed)
            queue.append(composed)
    return SemigroupSummary(len(seen), generators, truncated)


def syntactic_semigroup_size(d: Dfa, cap: int = DEFAULT_SEMIGROUP_CAP) -> SemigroupSummary:
    """Transition semigroup of the minimal DFA of L(d)."""
    return transition_semigroup(minimize(d), cap)


def quotient_complexities(d: Dfa) -> tuple[int, ...]:
    """Complexity of each state's language in the minimal DFA of L(d).

    Every quotient keeps the full alphabet of L (an empty quotient has
    complexity 1, not 0).
    """
    m = minimize(d)
    return tuple(minimize(replace(m, initial=q)).n for q in range(m.n))


class _PairSpace:
    """Shared image computations over a fixed minimal DFA."""

    def __init__(self, m: Dfa):
        self.m = m
        self.full = frozenset(range(m.n))
        self.finals = m.finals
        self.tables = {letter: m.delta[letter].image for letter in m.alphabet}
        self._images: dict[tuple[frozenset, str], frozenset] = {}

    def image(self, states: frozenset, letter: str) -> frozenset:
        key = (states, letter)
        cached = self._images.get(key)
        if cached is None:
            table = self.tables[letter]
            cached = frozenset(table[q] for q in states)
            self._images[key] = cached
        return cached

    def accepting(self, pair) -> bool:
        x, y = pair
        return x <= self.finals and not (y & self.finals)


def _atom_reaches_accepting(space: _PairSpace, start, memo: dict) -> bool:
    """Whether the pair automaton reaches an accepting pair from start.

    memo carries answers across starts: a fully explored closure with no
    accepting pair condemns every pair in it, while a successful search
    only vouches for the discovery chain of the pair it hit.
    """
    known = memo.get(start)
    if known is not None:
        return known
    if space.accepting(start):
        memo[start] = True
        return True
    parent = {start: None}
    queue = deque([start])
    found = None
    while queue and found is None:
        pair = queue.popleft()
        if memo.get(pair) is False:
            continue
        if memo.get(pair) is True:
            found = pair
            break
        for letter in space.m.alphabet:
            nx = space.image(pair[0], letter)
            ny = space.image(pair[1], letter)
            if nx & ny:
                continue  # overlap can never accept again
            nxt = (nx, ny)
            if nxt in parent:
                continue
            parent[nxt] = pair
            if space.accepting(nxt) or memo.get(nxt) is True:
                found = nxt
                break
            queue.append(nxt)
    if found is None:
        for pair in parent:
            memo[pair] = False
        return False
    while found is not None:
        memo[found] = True
        found = parent[found]
    return True


def atoms(d: Dfa, limit: int = DEFAULT_ATOM_STATE_LIMIT) -> frozenset[AtomKey]:
    """The subsets S of the minimal DFA's states whose atom is non-empty."""
    m = minimize(d)
    if m.n > limit:
        raise LimitError(f"atom enumeration over {m.n} states exceeds the limit {limit}")
    space = _PairSpace(m)
    memo: dict = {}
    found = []
    for bits in range(2**m.n):
        s = frozenset(q for q in range(m.n) if bits >> q & 1)
        if _atom_reaches_accepting(space, (s, space.full - s), memo):
            found.append(s)
    return frozenset(found)


def atom_automaton(d: Dfa, key) -> Dfa:
    """DFA recognizing the atom A_S over the minimal DFA of L(d).

    States are the image pairs reachable from (S, complement of S);
    overlapping pairs collapse into one sink.  Rejects empty atoms.
    """
    m = minimize(d)
    s = frozenset(key)
    if not s <= frozenset(range(m.n)):
        raise InputError(f"atom key {sorted(s)} outside the minimal DFA's states")
    space = _PairSpace(m)
    start = (s, space.full - s)
    index = {start: 0}
    order = [start]
    rows: dict[str, list] = {letter: [] for letter in m.alphabet}
    pos = 0
    while pos < len(order):
        pair = order[pos]
        pos += 1
        if pair is None:  # sink
            for letter in m.alphabet:
                rows[letter].append(index[None])
            continue
        for letter in m.alphabet:
            nx = space.image(pair[0], letter)
            ny = space.image(pair[1], letter)
            nxt = (nx, ny) if not (nx & ny) else None
            if nxt not in index:
                index[nxt] = len(order)
                order.append(nxt)
            rows[letter].append(index[nxt])
    finals = frozenset(
        i for i, pair in enumerate(order) if pair is not None and space.accepting(pair)
    )
    if not finals:
        raise InputError(f"atom for key {sorted(s)} is empty")
    delta = {letter: Transformation(tuple(rows[letter])) for letter in m.alphabet}
    return Dfa(len(order), m.alphabet, delta, 0, finals)


def atom_complexity(d: Dfa, key) -> int:
    """Quotient complexity of the atom A_S."""
    return minimize(atom_automaton(d, key)).n


def atom_formula(language_class: str, n: int, key) -> int:
    """Closed-form atom complexity for the three witness classes."""
    s = frozenset(key)
    if not s <= frozenset(range(n)):
        raise InputError(f"atom key {sorted(s)} outside 0..{n - 1}")
    size = len(s)

    if language_class == "left-ideal":
        if size == n:
            return n
        if size == 0:
            return 2 ** (n - 1)
        return 1 + sum(
            math.comb(n - 1, x) * math.comb(n - x - 1, y - 1)
            for x in range(1, size + 1)
            for y in range(1, n - size + 1)
        )

    if language_class == "suffix-closed":
        if size == 0:
            return n
        if size == n:
            return 2 ** (n - 1)
        if 0 in s:
            return 1 + sum(
                math.comb(n - 1, y) * math.comb(n - y - 1, x - 1)
                for x in range(1, size + 1)
                for y in range(1, n - size + 1)
            )
        raise InputError(f"no suffix-closed atom formula for key {sorted(s)}")

    if language_class == "suffix-free":
        if size == 0:
            return 2 ** (n - 2) + 1
        if s == frozenset({0}):
            return n
        if s <= frozenset(range(1, n - 1)):
            return 1 + sum(
                math.comb(n - 2, x) * math.comb(n - 2 - x, y)
                for x in range(1, size + 1)
                for y in range(0, n - 2 - size + 1)
            )
        raise InputError(f"no suffix-free atom formula for key {sorted(s)}")

    raise InputError(
        f"unknown language class {language_class!r}; "
        "choose left-ideal, suffix-closed, or suffix-free"
    )
