"""DFA documents (JSON) and DOT export."""

from __future__ import annotations

import json

from .automata import Dfa
from .errors import DocumentError, NotationError
from .transformations import Transformation, format_notation, parse_notation


def write_dfa(d: Dfa, name: str = "dfa") -> str:
    """Serialize a DFA as a JSON document, including the transformation
    notation of each letter."""
    doc = {
        "name": name,
        "states": d.n,
        "alphabet": list(d.alphabet),
        "transitions": {letter: list(d.delta[letter].image) for letter in d.alphabet},
        "initial": d.initial,
        "finals": sorted(d.finals),
        "notation": {letter: format_notation(d.delta[letter]) for letter in d.alphabet},
    }
    return json.dumps(doc, indent=2) + "\n"


def _require(cond: bool, where: str, message: str) -> None:
    if not cond:
        raise DocumentError(f"{where}: {message}")


def read_dfa(text: str) -> Dfa:
    """Parse and validate a DFA document; inverse of write_dfa."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from exc
    _require(isinstance(doc, dict), "document", "top level must be an object")

    for key in ("states", "alphabet", "transitions", "initial", "finals"):
        _require(key in doc, "document", f"missing field {key!r}")

    n = doc["states"]
    _require(isinstance(n, int) and n >= 1, "states", "must be a positive integer")

    alphabet = doc["alphabet"]
    _require(
        isinstance(alphabet, list)
        and all(isinstance(l, str) and l and not l.isspace() for l in alphabet),
        "alphabet",
        "must be a list of non-empty letter tokens",
    )
    _require(len(set(alphabet)) == len(alphabet), "alphabet", "letters must be unique")

    transitions = doc["transitions"]
    _require(isinstance(transitions, dict), "transitions", "must be an object")
    _require(
        set(transitions) == set(alphabet),
        "transitions",
        f"keys {sorted(transitions)} must match the alphabet {sorted(alphabet)}",
    )
    delta = {}
    for letter in alphabet:
        row = transitions[letter]
        where = f"transitions[{letter!r}]"
        _require(isinstance(row, list), where, "must be a list")
        _require(len(row) == n, where, f"has length {len(row)}, expected {n}")
        for q, target in enumerate(row):
            _require(
                isinstance(target, int) and 0 <= target < n,
                f"{where}[{q}]",
                f"state {target!r} outside 0..{n - 1}",
            )
        delta[letter] = Transformation(tuple(row))

    initial = doc["initial"]
    _require(
        isinstance(initial, int) and 0 <= initial < n,
        "initial",
        f"state {initial!r} outside 0..{n - 1}",
    )

    finals = doc["finals"]
    _require(
        isinstance(finals, list) and all(isinstance(q, int) and 0 <= q < n for q in finals),
        "finals",
        f"must be a list of states in 0..{n - 1}",
    )

    notation = doc.get("notation")
    if notation is not None:
        _require(isinstance(notation, dict), "notation", "must be an object")
        for letter, text_form in notation.items():
            where = f"notation[{letter!r}]"
            _require(letter in delta, where, "letter not in the alphabet")
            _require(isinstance(text_form, str), where, "must be a string")
            try:
                expanded = parse_notation(n, text_form)
            except NotationError as exc:
                raise DocumentError(f"{where}: {exc}") from exc
            _require(
                expanded == delta[letter],
                where,
                f"expands to {list(expanded.image)}, transitions say {list(delta[letter].image)}",
            )

    return Dfa(n, tuple(alphabet), delta, initial, frozenset(finals))


def export_dot(d: Dfa) -> str:
    """Render the DFA as a deterministic GraphViz digraph."""
    lines = [
        "digraph dfa {",
        "  rankdir=LR;",
        "  node [shape=circle];",
        '  __start [shape=point, label=""];',
    ]
    for q in range(d.n):
        if q in d.finals:
            lines.append(f"  {q} [shape=doublecircle];")
    lines.append(f"  __start -> {d.initial};")
    for p in range(d.n):
        targets: dict[int, list[str]] = {}
        for letter in d.alphabet:
            targets.setdefault(d.delta[letter](p), []).append(letter)
        for q in sorted(targets):
            label = ",".join(targets[q])
            lines.append(f'  {p} -> {q} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
