"""Complete DFAs, epsilon-NFAs, and the algorithms connecting them.

All automata live on the dense state set {0,..,n-1}.  DFAs are complete
by construction: every letter of the alphabet carries a total
transformation of the state set.  Operations that renumber states
(determinize, minimize) always use breadth-first discovery order from
the initial state, scanning letters in alphabet order, so results are
reproducible bit for bit.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputError
from .transformations import Transformation

EPSILON = None  # transition label for the empty word


@dataclass(frozen=True)
class Dfa:
    """Complete deterministic automaton with named letters."""

    n: int
    alphabet: tuple[str, ...]
    delta: dict[str, Transformation]
    initial: int
    finals: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "finals", frozenset(self.finals))
        delta = {
            letter: t if isinstance(t, Transformation) else Transformation(tuple(t))
            for letter, t in self.delta.items()
        }
        object.__setattr__(self, "delta", delta)
        if self.n < 1:
            raise InputError("a DFA needs at least one state")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise InputError("alphabet letters must be unique")
        if set(delta) != set(self.alphabet):
            raise InputError("delta must define exactly the alphabet letters")
        for letter, t in delta.items():
            if t.n != self.n:
                raise InputError(f"transformation of {letter!r} has size {t.n}, expected {self.n}")
        if not 0 <= self.initial < self.n:
            raise InputError(f"initial state {self.initial} outside 0..{self.n - 1}")
        if not self.finals <= frozenset(range(self.n)):
            raise InputError("final states outside the state set")

    def step(self, q: int, letter: str) -> int:
        try:
            t = self.delta[letter]
        except KeyError:
            raise InputError(f"letter {letter!r} not in alphabet {list(self.alphabet)}") from None
        return t(q)

    def transform(self, letter: str) -> Transformation:
        return self.delta[letter]


@dataclass(frozen=True)
class Nfa:
    """Nondeterministic automaton with initial-state set and epsilon moves."""

    n: int
    alphabet: tuple[str, ...]
    transitions: frozenset[tuple[int, str | None, int]]
    initials: frozenset[int]
    finals: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "transitions", frozenset(self.transitions))
        object.__setattr__(self, "initials", frozenset(self.initials))
        object.__setattr__(self, "finals", frozenset(self.finals))
        states = frozenset(range(self.n))
        for p, letter, q in self.transitions:
            if p not in states or q not in states:
                raise InputError(f"transition ({p},{letter},{q}) leaves the state set")
            if letter is not None and letter not in self.alphabet:
                raise InputError(f"transition letter {letter!r} not in alphabet")
        if not (self.initials <= states and self.finals <= states):
            raise InputError("initial/final states outside the state set")


def apply_word(d: Dfa, q: int, word: Iterable[str]) -> int:
    """The state reached from q by reading word left to right."""
    for letter in word:
        q = d.step(q, letter)
    return q


def accepts(d: Dfa, word: Iterable[str]) -> bool:
    return apply_word(d, d.initial, word) in d.finals


def reachable_states(d: Dfa) -> list[int]:
    """States reachable from the initial state, in BFS discovery order."""
    order = [d.initial]
    seen = {d.initial}
    queue = deque(order)
    while queue:
        p = queue.popleft()
        for letter in d.alphabet:
            q = d.delta[letter](p)
            if q not in seen:
                seen.add(q)
                order.append(q)
                queue.append(q)
    return order


def coreachable_states(d: Dfa) -> frozenset[int]:
    """States from which some final state can be reached."""
    pre: list[list[int]] = [[] for _ in range(d.n)]
    for letter in d.alphabet:
        t = d.delta[letter]
        for p in range(d.n):
            pre[t(p)].append(p)
    seen = set(d.finals)
    queue = deque(seen)
    while queue:
        q = queue.popleft()
        for p in pre[q]:
            if p not in seen:
                seen.add(p)
                queue.append(p)
    return frozenset(seen)


def determinize(m: Nfa) -> Dfa:
    """Subset construction with epsilon closure.

    States are the reachable closed subsets, numbered by BFS discovery
    order with letters scanned in alphabet order; the empty subset, when
    reachable, becomes an ordinary sink state.
    """
    eps: list[list[int]] = [[] for _ in range(m.n)]
    moves: dict[str, list[list[int]]] = {l: [[] for _ in range(m.n)] for l in m.alphabet}
    for p, letter, q in m.transitions:
        if letter is EPSILON:
            eps[p].append(q)
        else:
            moves[letter][p].append(q)

    def closure(states: Iterable[int]) -> frozenset[int]:
        result = set(states)
        stack = list(result)
        while stack:
            p = stack.pop()
            for q in eps[p]:
                if q not in result:
                    result.add(q)
                    stack.append(q)
        return frozenset(result)

    start = closure(m.initials)
    index: dict[frozenset[int], int] = {start: 0}
    order: list[frozenset[int]] = [start]
    rows: dict[str, list[int]] = {l: [] for l in m.alphabet}
    queue = deque([start])
    while queue:
        subset = queue.popleft()
        for letter in m.alphabet:
            move = set()
            table = moves[letter]
            for p in subset:
                move.update(table[p])
            target = closure(move)
            if target not in index:
                index[target] = len(order)
                order.append(target)
                queue.append(target)
            rows[letter].append(index[target])

    delta = {l: Transformation(tuple(rows[l])) for l in m.alphabet}
    finals = frozenset(i for i, subset in enumerate(order) if subset & m.finals)
    return Dfa(len(order), m.alphabet, delta, 0, finals)


def _renumber(d: Dfa) -> Dfa:
    """Relabel states in BFS discovery order; requires all states reachable."""
    order = reachable_states(d)
    if len(order) != d.n:
        raise InputError("renumbering requires every state to be reachable")
    new_of = {old: new for new, old in enumerate(order)}
    delta = {
        letter: Transformation(tuple(new_of[d.delta[letter](old)] for old in order))
        for letter in d.alphabet
    }
    finals = frozenset(new_of[q] for q in d.finals if q in new_of)
    return Dfa(d.n, d.alphabet, delta, 0, finals)


def _hopcroft(n: int, rows: dict[str, Transformation], finals: frozenset[int]) -> list[frozenset[int]]:
    """Partition {0,..,n-1} into equivalence classes (Hopcroft refinement)."""
    final_block = frozenset(finals)
    other_block = frozenset(range(n)) - final_block
    partition = {b for b in (final_block, other_block) if b}
    if len(partition) <= 1:
        return list(partition)

    pre: dict[str, list[list[int]]] = {}
    for letter, t in rows.items():
        table: list[list[int]] = [[] for _ in range(n)]
        for p in range(n):
            table[t(p)].append(p)
        pre[letter] = table

    worklist = {min(partition, key=len)}
    while worklist:
        splitter = worklist.pop()
        for letter in rows:
            table = pre[letter]
            moved = set()
            for q in splitter:
                moved.update(table[q])
            if not moved:
                continue
            for block in list(partition):
                inter = block & moved
                if not inter or len(inter) == len(block):
                    continue
                rest = block - inter
                inter, rest = frozenset(inter), frozenset(rest)
                partition.remove(block)
                partition.add(inter)
                partition.add(rest)
                if block in worklist:
                    worklist.remove(block)
                    worklist.add(inter)
                    worklist.add(rest)
                else:
                    worklist.add(inter if len(inter) <= len(rest) else rest)
    return list(partition)


def minimize(d: Dfa) -> Dfa:
    """The minimal complete DFA of L(d), canonically renumbered.

    Unreachable states are dropped, equivalent states merged; the result
    is idempotent under repeated minimization.
    """
    order = reachable_states(d)
    sub_of = {old: i for i, old in enumerate(order)}
    n = len(order)
    rows = {
        letter: Transformation(tuple(sub_of[d.delta[letter](old)] for old in order))
        for letter in d.alphabet
    }
    finals = frozenset(sub_of[q] for q in d.finals if q in sub_of)

    blocks = _hopcroft(n, rows, finals)
    block_of = [0] * n
    for i, block in enumerate(blocks):
        for q in block:
            block_of[q] = i
    reps = [min(block) for block in blocks]
    delta = {
        letter: Transformation(tuple(block_of[rows[letter](rep)] for rep in reps))
        for letter in d.alphabet
    }
    quotient = Dfa(
        len(blocks),
        d.alphabet,
        delta,
        block_of[sub_of[d.initial]],
        frozenset(i for i, block in enumerate(blocks) if block <= finals and block),
    )
    return _renumber(quotient)


def complete_over(d: Dfa, sigma: Sequence[str]) -> Dfa:
    """Extend d to the alphabet sigma, sending new letters to a fresh sink.

    If sigma equals d's alphabet the automaton is returned unchanged; a
    permutation of the same letters only reorders the alphabet.
    """
    sigma = tuple(sigma)
    if len(set(sigma)) != len(sigma):
        raise InputError("sigma letters must be unique")
    missing = set(d.alphabet) - set(sigma)
    if missing:
        raise InputError(f"sigma is missing letters {sorted(missing)} of the automaton")
    if sigma == d.alphabet:
        return d
    if set(sigma) == set(d.alphabet):
        return Dfa(d.n, sigma, dict(d.delta), d.initial, d.finals)
    sink = d.n
    delta = {}
    for letter in sigma:
        if letter in d.delta:
            delta[letter] = Transformation(d.delta[letter].image + (sink,))
        else:
            delta[letter] = Transformation((sink,) * (d.n + 1))
    return Dfa(d.n + 1, sigma, delta, d.initial, d.finals)


def union_alphabet(d1: Dfa, d2: Dfa) -> tuple[str, ...]:
    """d1's letters in order, then d2's letters not already present."""
    return d1.alphabet + tuple(l for l in d2.alphabet if l not in d1.alphabet)


def equivalent(d1: Dfa, d2: Dfa) -> bool:
    """Language equality, over the union alphabet when alphabets differ."""
    sigma = union_alphabet(d1, d2)
    c1 = complete_over(d1, sigma)
    c2 = complete_over(d2, sigma)
    start = (c1.initial, c2.initial)
    seen = {start}
    queue = deque([start])
    while queue:
        p, q = queue.popleft()
        if (p in c1.finals) != (q in c2.finals):
            return False
        for letter in sigma:
            pair = (c1.delta[letter](p), c2.delta[letter](q))
            if pair not in seen:
                seen.add(pair)
                queue.append(pair)
    return True


def occurring_letters(d: Dfa) -> frozenset[str]:
    """Letters appearing in at least one accepted word."""
    reach = set(reachable_states(d))
    core = coreachable_states(d)
    return frozenset(
        letter
        for letter in d.alphabet
        if any(p in reach and d.delta[letter](p) in core for p in range(d.n))
    )


def restrict_to_occurring(d: Dfa) -> Dfa:
    """Drop letters that occur in no accepted word (states untouched)."""
    occ = occurring_letters(d)
    if occ == frozenset(d.alphabet):
        return d
    alphabet = tuple(l for l in d.alphabet if l in occ)
    return Dfa(d.n, alphabet, {l: d.delta[l] for l in alphabet}, d.initial, d.finals)


def complexity(d: Dfa) -> int:
    """Quotient complexity of L(d): minimal DFA size over the occurring letters."""
    return minimize(restrict_to_occurring(d)).n
