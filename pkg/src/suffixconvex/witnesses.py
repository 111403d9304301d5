"""Witness DFA streams and the closed-form complexity values they meet.

Each family tag names one stream of minimal DFAs, one automaton per
state count n.  ``expected`` is a pure table of formulas; it never
measures anything, so the verification harness can compare it against
independently measured values.
"""

from __future__ import annotations

from .automata import Dfa
from .errors import InputError
from .operations import LetterMap, apply_dialect
from .transformations import Transformation, compose_many, cycle, send_to

FAMILIES = (
    "regular",
    "left-ideal",
    "left-ideal-alt",
    "suffix-closed",
    "suffix-free-5",
    "suffix-free-n",
    "suffix-free-3",
    "suffix-free-2star",
)

MIN_N = {
    "regular": 3,
    "left-ideal": 4,
    "left-ideal-alt": 4,
    "suffix-closed": 4,
    "suffix-free-5": 4,
    "suffix-free-n": 4,
    "suffix-free-3": 4,
    "suffix-free-2star": 6,
}

# the three language classes the formula tables are keyed by
CLASS_OF = {
    "left-ideal": "left-ideal",
    "left-ideal-alt": "left-ideal",
    "suffix-closed": "suffix-closed",
    "suffix-free-5": "suffix-free",
    "suffix-free-n": "suffix-free",
    "suffix-free-3": "suffix-free",
    "suffix-free-2star": "suffix-free",
}


def _check_family(family: str, n: int) -> None:
    if family not in FAMILIES:
        raise InputError(f"unknown family {family!r}; choose from {list(FAMILIES)}")
    if n < MIN_N[family]:
        raise InputError(f"family {family!r} needs n >= {MIN_N[family]}, got {n}")


def _ideal_letters(n: int) -> dict[str, Transformation]:
    return {
        "a": cycle(n, list(range(1, n))),
        "b": cycle(n, [1, 2]),
        "c": send_to(n, [n - 1], 1),
        "d": send_to(n, [n - 1], 0),
        "e": send_to(n, range(n), 1),
    }


def _suffix_free_5_letters(n: int) -> dict[str, Transformation]:
    to_last = send_to(n, [0], n - 1)
    return {
        "a": compose_many([to_last, cycle(n, list(range(1, n - 1)))]),
        "b": compose_many([to_last, cycle(n, [1, 2])]),
        "c": compose_many([to_last, send_to(n, [n - 2], 1)]),
        "d": send_to(n, [0, 1], n - 1),
        "e": compose_many([send_to(n, range(1, n), n - 1), send_to(n, [0], 1)]),
    }


def _maybe_cycle(n: int, states: list[int]) -> list[Transformation]:
    # a one-state "cycle" from a shrinking definition range is the identity
    return [cycle(n, states)] if len(states) >= 2 else []


def make_witness(family: str, n: int) -> Dfa:
    """The witness DFA of the given family at n states, letters in
    definition order."""
    _check_family(family, n)
    if family == "regular":
        delta = {
            "a": cycle(n, list(range(n))),
            "b": cycle(n, [0, 1]),
            "c": send_to(n, [n - 1], 0),
        }
        return Dfa(n, ("a", "b", "c"), delta, 0, frozenset({n - 1}))

    if family in ("left-ideal", "left-ideal-alt", "suffix-closed"):
        delta = _ideal_letters(n)
        finals = {
            "left-ideal": frozenset({n - 1}),
            "left-ideal-alt": frozenset(range(1, n)),
            "suffix-closed": frozenset({0}),
        }[family]
        return Dfa(n, ("a", "b", "c", "d", "e"), delta, 0, finals)

    if family == "suffix-free-5":
        delta = _suffix_free_5_letters(n)
        finals = frozenset(q for q in range(1, n - 1) if q % 2 == 1)
        if n == 4:
            # a and b coincide at n=4, so the witness drops a
            alphabet = ("b", "c", "d", "e")
            return Dfa(n, alphabet, {l: delta[l] for l in alphabet}, 0, finals)
        return Dfa(n, ("a", "b", "c", "d", "e"), delta, 0, finals)

    if family == "suffix-free-n":
        to_last = send_to(n, [0], n - 1)
        delta = {
            "a": compose_many([to_last, cycle(n, list(range(1, n - 1)))]),
            "b": compose_many([to_last, cycle(n, [1, 2])]),
        }
        for p in range(1, n - 1):
            delta[f"c{p}"] = compose_many([send_to(n, [p], n - 1), send_to(n, [0], p)])
        alphabet = ("a", "b") + tuple(f"c{p}" for p in range(1, n - 1))
        return Dfa(n, alphabet, delta, 0, frozenset({n - 2}))

    if family == "suffix-free-3":
        # c sends 1 to the dead state n-1 (which keeps its all-letter
        # self-loop) and 0 to 1; reading the first atom as a transposition
        # would make n-1 co-reachable and break suffix-freeness
        to_last = send_to(n, [0], n - 1)
        delta = {
            "a": compose_many([to_last, cycle(n, list(range(1, n - 1)))]),
            "b": compose_many([to_last, cycle(n, [1, 2])]),
            "c": compose_many([send_to(n, [1], n - 1), send_to(n, [0], 1)]),
        }
        return Dfa(n, ("a", "b", "c"), delta, 0, frozenset({n - 2}))

    # suffix-free-2star
    to_last = send_to(n, [0], n - 1)
    delta = {
        "a": compose_many([to_last, cycle(n, [1, 2, 3])] + _maybe_cycle(n, list(range(4, n - 1)))),
        "b": compose_many(
            [send_to(n, [2], n - 1), send_to(n, [1], 2), send_to(n, [0], 1), cycle(n, [3, 4])]
        ),
        "c": compose_many([to_last, cycle(n, list(range(1, n - 1)))]),
    }
    return Dfa(n, ("a", "b", "c"), delta, 0, frozenset({1}))


def make_dialect(family: str, n: int, pi: LetterMap) -> Dfa:
    """apply_dialect over the witness, positionally over the definition
    alphabet.

    For the five-letter suffix-free family at n=4 a five-entry map is
    applied to the unmerged automaton (whose first two letters carry the
    same transformation), so dialect tuples stay positionally uniform
    across the whole stream.
    """
    _check_family(family, n)
    pi = tuple(pi)
    if family == "suffix-free-5" and n == 4 and len(pi) == 5:
        delta = _suffix_free_5_letters(n)
        finals = frozenset(q for q in range(1, n - 1) if q % 2 == 1)
        base = Dfa(n, ("a", "b", "c", "d", "e"), delta, 0, finals)
        return apply_dialect(base, pi)
    return apply_dialect(make_witness(family, n), pi)


def _binary(m: int | None, quantity: str) -> int:
    if m is None:
        raise InputError(f"quantity {quantity!r} needs both m and n")
    return m


def expected(family: str, quantity: str, m: int | None, n: int) -> int:
    """Closed-form value claimed for (family, quantity, m, n).

    Quantity strings: "semigroup", "reverse", "atoms-count", "star",
    "product-restricted", "product-unrestricted", and the boolean tags
    "union", "symdiff", "difference", "intersection" suffixed with
    "-restricted" or "-unrestricted".  Pairs with no claimed bound are
    rejected.  Per-atom expectations live in measures.atom_formula.
    """
    _check_family(family, n)
    table = _EXPECTED.get(family)
    if table is None or quantity not in table:
        raise InputError(f"no claimed bound for quantity {quantity!r} in family {family!r}")
    if quantity in _BINARY_QUANTITIES:
        m = _binary(m, quantity)
        if m < MIN_N[family]:
            raise InputError(f"family {family!r} needs m >= {MIN_N[family]}, got {m}")
        if family == "suffix-free-3" and quantity in _BOOLEAN_QUANTITIES and (m, n) == (4, 4):
            raise InputError("the three-letter suffix-free boolean pair excludes (m,n)=(4,4)")
    if family == "suffix-free-5" and quantity == "semigroup" and n < 6:
        raise InputError("the suffix-free semigroup bound applies from n=6")
    return table[quantity](m, n)


_BOOLEAN_QUANTITIES = frozenset(
    f"{op}-{mode}"
    for op in ("union", "symdiff", "difference", "intersection")
    for mode in ("restricted", "unrestricted")
)
_BINARY_QUANTITIES = _BOOLEAN_QUANTITIES | {"product-restricted", "product-unrestricted"}


def _boolean_table(restricted, union_u, diff_u, inter_u):
    table = {}
    for op in ("union", "symdiff", "difference", "intersection"):
        table[f"{op}-restricted"] = restricted
    table["union-unrestricted"] = union_u
    table["symdiff-unrestricted"] = union_u
    table["difference-unrestricted"] = diff_u
    table["intersection-unrestricted"] = inter_u
    return table


_IDEAL_TABLE = {
    "semigroup": lambda m, n: n ** (n - 1) + n - 1,
    "reverse": lambda m, n: 2 ** (n - 1) + 1,
    "atoms-count": lambda m, n: 2 ** (n - 1) + 1,
    "star": lambda m, n: n + 1,
    **_boolean_table(
        lambda m, n: m * n,
        lambda m, n: (m + 1) * (n + 1),
        lambda m, n: m * n + m,
        lambda m, n: m * n,
    ),
}

# restricted and unrestricted coincide: suffix-free languages always
# have an empty quotient
_SF_UNION = lambda m, n: m * n - (m + n - 2)
_SF_DIFF = lambda m, n: m * n - (m + 2 * n - 4)
_SF_INTER = lambda m, n: m * n - 2 * (m + n - 3)
_SUFFIX_FREE_BOOLEANS = {
    f"{op}-{mode}": formula
    for op, formula in (
        ("union", _SF_UNION),
        ("symdiff", _SF_UNION),
        ("difference", _SF_DIFF),
        ("intersection", _SF_INTER),
    )
    for mode in ("restricted", "unrestricted")
}

_EXPECTED: dict[str, dict] = {
    "regular": {
        "semigroup": lambda m, n: n**n,
        "reverse": lambda m, n: 2**n,
        "star": lambda m, n: 2 ** (n - 1) + 2 ** (n - 2),
        "product-restricted": lambda m, n: (m - 1) * 2**n + 2 ** (n - 1),
        "product-unrestricted": lambda m, n: m * 2**n + 2 ** (n - 1),
        **_boolean_table(
            lambda m, n: m * n,
            lambda m, n: (m + 1) * (n + 1),
            lambda m, n: m * n + m,
            lambda m, n: m * n,
        ),
    },
    "left-ideal": {
        **_IDEAL_TABLE,
        "product-restricted": lambda m, n: m + n - 1,
        "product-unrestricted": lambda m, n: m * n + m + n,
    },
    # the alternative left-ideal stream meets no product bound
    "left-ideal-alt": dict(_IDEAL_TABLE),
    "suffix-closed": {
        **_IDEAL_TABLE,
        "star": lambda m, n: n,
        "product-restricted": lambda m, n: m * n - n + 1,
        "product-unrestricted": lambda m, n: m * n + m + 1,
    },
    "suffix-free-5": {
        "semigroup": lambda m, n: (n - 1) ** (n - 2) + n - 2,
        "reverse": lambda m, n: 2 ** (n - 2) + 1,
        "atoms-count": lambda m, n: 2 ** (n - 2) + 1,
        **_SUFFIX_FREE_BOOLEANS,
    },
    "suffix-free-3": {
        "star": lambda m, n: 2 ** (n - 2) + 1,
        "product-restricted": lambda m, n: (m - 1) * 2 ** (n - 2) + 1,
        "product-unrestricted": lambda m, n: (m - 1) * 2 ** (n - 2) + 1,
        **_SUFFIX_FREE_BOOLEANS,
    },
}
