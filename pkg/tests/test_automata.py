import pytest
from helpers import (
    dfa_corpus,
    language_upto,
    quotient_count_oracle,
    reachable_oracle,
    singleton_word_dfa,
)
from hypothesis import given, settings, strategies as st

from suffixconvex.automata import (
    Dfa,
    Nfa,
    accepts,
    apply_word,
    complete_over,
    complexity,
    determinize,
    equivalent,
    minimize,
    occurring_letters,
)
from suffixconvex.errors import InputError
from suffixconvex.operations import boolean_restricted, reverse
from suffixconvex.witnesses import make_dialect, make_witness


def test_apply_word_examples():
    assert apply_word(make_witness("regular", 4), 0, "ab") == 0
    d2 = make_witness("left-ideal", 4)
    assert apply_word(d2, 3, "d") == 0
    assert apply_word(d2, 2, "") == 2


def test_apply_word_rejects_unknown_letter():
    with pytest.raises(InputError):
        apply_word(make_witness("regular", 4), 0, ["a", "z"])


def test_accepts_examples():
    d2 = make_witness("left-ideal", 4)
    assert accepts(d2, "eaa")
    assert accepts(d2, "") == (d2.initial in d2.finals) == False
    assert accepts(make_witness("suffix-closed", 4), "")


def test_dfa_validation():
    with pytest.raises(InputError):
        Dfa(2, ("a",), {"a": (0, 2)}, 0, frozenset())
    with pytest.raises(InputError):
        Dfa(2, ("a",), {"b": (0, 1)}, 0, frozenset())
    with pytest.raises(InputError):
        Dfa(2, ("a", "a"), {"a": (0, 1)}, 0, frozenset())
    with pytest.raises(InputError):
        Dfa(2, ("a",), {"a": (0, 1)}, 5, frozenset())
    with pytest.raises(InputError):
        Dfa(2, ("a",), {"a": (0, 1)}, 0, frozenset({3}))


def test_determinize_reversal_of_left_ideal_dialect():
    m4 = make_dialect("left-ideal-alt", 4, ("a", None, None, "d", "e"))
    assert reverse(m4).n == 9  # all reachable subsets, kept distinct


def test_determinize_of_deterministic_nfa_is_isomorphic():
    d = make_witness("regular", 4)
    transitions = frozenset(
        (p, letter, d.delta[letter](p)) for letter in d.alphabet for p in range(d.n)
    )
    nfa = Nfa(d.n, d.alphabet, transitions, frozenset({d.initial}), d.finals)
    got = determinize(nfa)
    assert got == d  # witness numbering is already BFS order


def test_determinize_star_nfa_of_suffix_free_has_enough_states():
    from suffixconvex.operations import star

    raw = star(make_witness("suffix-free-3", 4))
    assert raw.n >= 5
    assert minimize(raw).n == 5


def test_determinize_subset_labels_consistent():
    # independent replay of the subset construction over an NFA with
    # epsilon moves
    nfa = Nfa(
        4,
        ("a", "b"),
        frozenset(
            {(0, None, 1), (1, "a", 2), (2, "b", 0), (2, "a", 3), (3, "a", 3), (0, "b", 3)}
        ),
        frozenset({0}),
        frozenset({3}),
    )
    dfa = determinize(nfa)

    def closure(states):
        out = set(states)
        changed = True
        while changed:
            changed = False
            for p, letter, q in nfa.transitions:
                if letter is None and p in out and q not in out:
                    out.add(q)
                    changed = True
        return frozenset(out)

    labels = {0: closure(nfa.initials)}
    queue = [0]
    seen = {labels[0]: 0}
    while queue:
        i = queue.pop(0)
        for letter in nfa.alphabet:
            move = {q for p, l, q in nfa.transitions if l == letter and p in labels[i]}
            target = closure(move)
            j = dfa.delta[letter](i)
            if target in seen:
                assert seen[target] == j
            else:
                seen[target] = j
                labels[j] = target
                queue.append(j)
            assert (j in dfa.finals) == bool(target & nfa.finals)
    assert len(seen) == dfa.n


def test_minimize_leaves_minimal_witness_unchanged():
    w = make_witness("left-ideal", 5)
    assert minimize(w) == w


def test_minimize_merges_duplicate_sinks():
    # two identical accepting sinks and one unreachable state
    d = Dfa(
        4,
        ("a",),
        {"a": (1, 1, 2, 3)},
        0,
        frozenset({1, 2}),
    )
    m = minimize(d)
    assert m.n == 2
    assert equivalent(d, m)


def test_minimize_direct_product_counts():
    d1 = make_dialect("left-ideal-alt", 4, ("a", "b", None, "d", "e"))
    d2 = make_dialect("left-ideal-alt", 5, ("a", "e", None, "d", "b"))
    product = boolean_restricted(d1, d2, "symdiff")
    assert minimize(product).n == 20


def test_minimize_idempotent_and_equivalent_on_corpus():
    for d in dfa_corpus(seed=11, count=60):
        m = minimize(d)
        assert minimize(m) == m
        assert equivalent(d, m)
        assert m.n == quotient_count_oracle(d)


def test_equivalent_examples():
    d = make_witness("suffix-closed", 5)
    assert equivalent(d, minimize(d))
    from suffixconvex.operations import complement

    assert equivalent(
        make_witness("left-ideal-alt", 4), complement(make_witness("suffix-closed", 4))
    )
    # the single-final left-ideal stream is a different language
    assert not equivalent(
        make_witness("left-ideal", 4), complement(make_witness("suffix-closed", 4))
    )
    assert not equivalent(make_witness("left-ideal", 4), make_witness("left-ideal", 5))


def test_equivalent_over_different_alphabets():
    only_a = singleton_word_dfa("a", ("a",))
    with_dead_b = singleton_word_dfa("a", ("a", "b"))
    assert equivalent(only_a, with_dead_b)
    assert not equivalent(only_a, singleton_word_dfa("b", ("a", "b")))


def test_complete_over():
    d = make_witness("left-ideal-alt", 4)
    done = complete_over(d, ("a", "b", "c", "d", "e", "f"))
    assert done.n == 5
    assert done.delta["f"].image == (4, 4, 4, 4, 4)
    assert done.delta["a"].image == d.delta["a"].image + (4,)
    assert complete_over(d, d.alphabet) is d
    d7 = make_witness("suffix-free-3", 4)
    assert complete_over(d7, ("a", "b", "c", "d")).n == 5
    with pytest.raises(InputError):
        complete_over(d, ("a", "b"))


def test_complete_over_reorders_without_sink():
    d = make_witness("regular", 3)
    reordered = complete_over(d, ("c", "a", "b"))
    assert reordered.n == d.n
    assert reordered.alphabet == ("c", "a", "b")
    assert equivalent(d, reordered)


def test_equivalent_with_empty_alphabet_side():
    eps = Dfa(1, (), {}, 0, frozenset({0}))
    eps_over_a = Dfa(2, ("a",), {"a": (1, 1)}, 0, frozenset({0}))
    a_star = Dfa(1, ("a",), {"a": (0,)}, 0, frozenset({0}))
    assert equivalent(eps, eps_over_a)
    assert not equivalent(eps, a_star)


def test_occurring_letters_on_unrestricted_products():
    from suffixconvex.operations import boolean_unrestricted

    d1 = make_dialect("suffix-closed", 4, ("a", "b", "c", "d", "e"))
    d2 = make_dialect("suffix-closed", 4, ("a", "e", "f", "d", "b"))
    inter = boolean_unrestricted(d1, d2, "intersection")
    assert occurring_letters(inter) == frozenset("abde")
    diff = boolean_unrestricted(d1, d2, "difference")
    assert occurring_letters(diff) == frozenset("abcde")


def test_occurring_letters_empty_language():
    empty = Dfa(1, ("a", "b"), {"a": (0,), "b": (0,)}, 0, frozenset())
    assert occurring_letters(empty) == frozenset()
    assert complexity(empty) == 1


def test_complexity_examples():
    assert complexity(make_witness("suffix-free-5", 6)) == 6
    # epsilon-only language over a letter that never occurs
    eps_only = Dfa(2, ("a",), {"a": (1, 1)}, 0, frozenset({0}))
    assert complexity(eps_only) == 1
    from suffixconvex.operations import boolean_unrestricted

    d1 = make_dialect("suffix-closed", 4, ("a", "b", "c", "d", "e"))
    d2 = make_dialect("suffix-closed", 4, ("a", "e", "f", "d", "b"))
    assert complexity(boolean_unrestricted(d1, d2, "union")) == 25


def test_complement_preserves_minimal_size_on_corpus():
    from suffixconvex.operations import complement

    for d in dfa_corpus(seed=23, count=40, max_n=5):
        assert minimize(complement(d)).n == minimize(d).n


def test_double_reversal_determinization_is_minimal_small():
    for d in dfa_corpus(seed=5, count=30, max_n=5):
        double = reverse(reverse(d))
        assert double.n == minimize(d).n
        if occurring_letters(d) == frozenset(d.alphabet):
            assert double.n == complexity(d)


def test_equivalent_matches_exact_word_oracle():
    # two DFAs that differ at all differ on a word shorter than the
    # product of their sizes, so the bounded word check is exact
    from helpers import same_language_upto

    corpus = dfa_corpus(seed=13, count=40, max_n=4, max_letters=2)
    compared = 0
    for d1, d2 in zip(corpus[0::2], corpus[1::2]):
        if set(d1.alphabet) != set(d2.alphabet):
            continue
        compared += 1
        assert equivalent(d1, d2) == same_language_upto(d1, d2, d1.n * d2.n)
    assert compared >= 8


def test_reachability_matches_oracle():
    for d in dfa_corpus(seed=7, count=40):
        from suffixconvex.automata import reachable_states

        assert set(reachable_states(d)) == reachable_oracle(d)


def test_language_of_minimized_matches_brute_force():
    for d in dfa_corpus(seed=9, count=20, max_n=4):
        m = minimize(d)
        assert language_upto(d, 5) == language_upto(m, 5)


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_minimize_properties_hypothesis(data):
    n = data.draw(st.integers(min_value=1, max_value=5))
    k = data.draw(st.integers(min_value=1, max_value=3))
    alphabet = tuple("abc"[:k])
    delta = {
        l: data.draw(st.tuples(*[st.integers(0, n - 1) for _ in range(n)]))
        for l in alphabet
    }
    finals = frozenset(data.draw(st.sets(st.integers(0, n - 1))))
    d = Dfa(n, alphabet, delta, 0, finals)
    m = minimize(d)
    assert minimize(m) == m
    assert equivalent(d, m)
    assert m.n == quotient_count_oracle(d)
