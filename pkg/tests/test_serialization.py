import json

import pytest
from helpers import dfa_corpus

from suffixconvex.automata import Dfa
from suffixconvex.errors import DocumentError
from suffixconvex.serialization import export_dot, read_dfa, write_dfa
from suffixconvex.witnesses import FAMILIES, MIN_N, make_dialect, make_witness


def test_write_matches_definition_expansion():
    doc = json.loads(write_dfa(make_witness("left-ideal", 4), name="left-ideal-4"))
    assert doc["name"] == "left-ideal-4"
    assert doc["states"] == 4
    assert doc["alphabet"] == ["a", "b", "c", "d", "e"]
    assert doc["transitions"]["a"] == [0, 2, 3, 1]
    assert doc["transitions"]["e"] == [1, 1, 1, 1]
    assert doc["initial"] == 0
    assert doc["finals"] == [3]
    assert doc["notation"]["a"] == "(1,2,3)"
    assert doc["notation"]["e"] == "(Q->1)"


def test_round_trip_witnesses_and_dialects():
    for family in FAMILIES:
        w = make_witness(family, MIN_N[family] + 1)
        assert read_dfa(write_dfa(w)) == w
    d = make_dialect("suffix-closed", 5, ("a", None, None, "d", "e"))
    assert read_dfa(write_dfa(d)) == d


def test_round_trip_random(tmp_path):
    for d in dfa_corpus(seed=97, count=20, max_n=5):
        assert read_dfa(write_dfa(d)) == d


def test_read_without_notation():
    text = json.dumps(
        {
            "name": "toy",
            "states": 2,
            "alphabet": ["a"],
            "transitions": {"a": [1, 0]},
            "initial": 0,
            "finals": [1],
        }
    )
    d = read_dfa(text)
    assert d.n == 2 and d.delta["a"].image == (1, 0)


@pytest.mark.parametrize(
    "mutation,fragment",
    [
        (lambda doc: doc["transitions"]["a"].__setitem__(2, 7), "outside 0..3"),
        (lambda doc: doc["transitions"]["a"].pop(), "length 3, expected 4"),
        (lambda doc: doc.pop("finals"), "missing field 'finals'"),
        (lambda doc: doc.__setitem__("initial", 9), "outside 0..3"),
        (lambda doc: doc.__setitem__("finals", [0, 11]), "finals"),
        (lambda doc: doc["transitions"].pop("a"), "must match the alphabet"),
        (lambda doc: doc.__setitem__("alphabet", ["a", "a", "b", "c", "d"]), "unique"),
        (lambda doc: doc["notation"].__setitem__("a", "(1,2)"), "expands to"),
        (lambda doc: doc["notation"].__setitem__("a", "((1,2)"), "notation['a']"),
        (lambda doc: doc.__setitem__("states", 0), "positive integer"),
    ],
)
def test_read_rejects_bad_documents(mutation, fragment):
    doc = json.loads(write_dfa(make_witness("left-ideal", 4)))
    mutation(doc)
    with pytest.raises(DocumentError) as err:
        read_dfa(json.dumps(doc))
    assert fragment in str(err.value)


def test_read_rejects_non_json():
    with pytest.raises(DocumentError):
        read_dfa("not json at all {")


def test_dot_regular_witness():
    dot = export_dot(make_witness("regular", 3))
    assert dot.count("doublecircle") == 1
    assert '0 -> 0 [label="c"];' in dot
    assert '0 -> 1 [label="a,b"];' in dot
    assert "__start -> 0;" in dot


def test_dot_suffix_free_dead_state_loop():
    dot = export_dot(make_witness("suffix-free-3", 5))
    assert '4 -> 4 [label="a,b,c"];' in dot


def test_dot_single_state_no_edges():
    dot = export_dot(Dfa(1, (), {}, 0, frozenset({0})))
    assert "->" not in dot.replace("__start -> 0;", "")
    assert dot.count("doublecircle") == 1


def test_dot_deterministic():
    d = make_witness("left-ideal", 5)
    assert export_dot(d) == export_dot(d)
