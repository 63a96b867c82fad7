"""Finite automata, the restart construction for omega powers, and the
three low-level witness languages."""

import itertools
import random

import pytest

from omegapower import (
    LassoWord,
    Member,
    WorkbenchError,
    accepts_finite,
    automaton_from_json,
    automaton_to_json,
    baire_embed_prefix,
    lasso_accepts,
    make_automaton,
    omega_power_automaton,
    pinf_member,
    word,
    xi1_sigma_witness,
    zero_star_one_automaton,
    zero_word_automaton,
)
from omegapower.corpus import corpus_lassos
from omegapower.oracles import omega_factor_evidence


def lasso(text):
    spoke, _, cyc = text.partition("(")
    return LassoWord(spoke, cyc.rstrip(")"), size=2)


def test_sigma_witness_finite_membership():
    v = xi1_sigma_witness()
    assert accepts_finite(v, word("01", 2))
    assert accepts_finite(v, word("1001", 2))
    assert not accepts_finite(v, word("10", 2))
    assert accepts_finite(v, word("0", 2))
    assert not accepts_finite(v, word("1", 2))
    assert not accepts_finite(v, word("", 2))


def test_sigma_witness_language_shape():
    # members are exactly 0w and 1 0^k 1 w
    v = xi1_sigma_witness()
    for n in range(7):
        for tup in itertools.product((0, 1), repeat=n):
            s = "".join(map(str, tup))
            expect = s.startswith("0") or (
                s.startswith("1") and "1" in s[1:]
            )
            assert accepts_finite(v, word(tup, 2)) is expect


def test_sigma_witness_omega_power_excludes_one_point():
    aut = omega_power_automaton(xi1_sigma_witness())
    for w in corpus_lassos(2, 4, 4):
        assert lasso_accepts(aut, w) is (w != lasso("1(0)"))


def test_zero_word_omega_power_is_one_point():
    aut = omega_power_automaton(zero_word_automaton())
    for w in corpus_lassos(2, 4, 4):
        assert lasso_accepts(aut, w) is (w == lasso("(0)"))


def test_zero_star_one_omega_power_is_pinf():
    aut = omega_power_automaton(zero_star_one_automaton())
    for w in corpus_lassos(2, 4, 4):
        assert lasso_accepts(aut, w) is pinf_member(w)


def test_pinf_frozen():
    assert pinf_member(lasso("(01)"))
    assert not pinf_member(lasso("111(0)"))
    assert pinf_member(lasso("(1)"))


def test_empty_language_omega_power_is_empty():
    empty = make_automaton(["s"], "s", [], 2, [])
    aut = omega_power_automaton(empty)
    for w in corpus_lassos(2, 3, 3):
        assert not lasso_accepts(aut, w)


def test_baire_embedding_frozen():
    assert str(baire_embed_prefix([0])) == "1"
    assert str(baire_embed_prefix([2, 0])) == "0011"
    assert str(baire_embed_prefix([])) == "ε"
    assert str(baire_embed_prefix([1, 1])) == "0101"


def test_json_roundtrip():
    v = xi1_sigma_witness()
    again = automaton_from_json(automaton_to_json(v))
    assert again == v
    for n in range(5):
        for tup in itertools.product((0, 1), repeat=n):
            w = word(tup, 2)
            assert accepts_finite(again, w) == accepts_finite(v, w)


def test_json_rejects_malformed():
    with pytest.raises(WorkbenchError):
        automaton_from_json("{}")


def _random_automaton(rng):
    n = rng.randint(1, 4)
    states = [f"s{i}" for i in range(n)]
    edges = []
    for s in states:
        for a in (0, 1):
            for t in states:
                if rng.random() < 0.4:
                    edges.append((s, a, t))
    accepting = [s for s in states if rng.random() < 0.5]
    return make_automaton(states, states[0], accepting, 2, edges)


def test_omega_power_agrees_with_factor_search():
    # dual route: product-graph acceptance vs brute factorization with the
    # loop-removal cap (|u| + |v|) * (states + 2)
    rng = random.Random(20260814)
    lassos = list(corpus_lassos(2, 3, 3))
    for _ in range(40):
        v = _random_automaton(rng)
        aut = omega_power_automaton(v)
        member = lambda f: accepts_finite(v, f)
        for w in lassos:
            cap = (len(w.spoke) + len(w.cycle)) * (len(v.states) + 2)
            got = omega_factor_evidence(w, member, cap)
            assert got in (Member.YES, Member.NO)
            assert (got is Member.YES) == lasso_accepts(aut, w)
