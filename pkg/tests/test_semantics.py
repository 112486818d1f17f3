import random
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from enact.errors import ForeignEvent, UnsupportedNode
from enact.semantics import in_lang_E, interleave, sem
from enact.terms import (
    EPS, Cat, Interaction, Leaf, Or, Par, Shuffle, interactions_of, leaf, receive, send,
)
from gen import interaction_terms, random_term
from oracles import brute_interleavings

I1 = Interaction("a", "b", "M1")
I2 = Interaction("b", "c", "M2")
I3 = Interaction("c", "d", "M3")


def test_interleave_examples():
    assert interleave((), ("x", "y")) == {("x", "y")}
    assert interleave(("x",), ("y",)) == {("x", "y"), ("y", "x")}


def test_interleave_count_matches_brute_force():
    expected = brute_interleavings(("a", "b"), ("c", "d"))
    assert len(expected) == 6
    assert interleave(("a", "b"), ("c", "d")) == expected


@given(st.lists(st.integers(0, 9), max_size=4, unique=True), st.lists(st.integers(10, 19), max_size=4, unique=True))
def test_interleave_properties(xs, ys):
    t1, t2 = tuple(xs), tuple(ys)
    got = interleave(t1, t2)
    assert got == interleave(t2, t1)
    assert len(got) == comb(len(t1) + len(t2), len(t1))
    assert got == brute_interleavings(t1, t2)
    assert interleave(t1, ()) == {t1}


def test_sem_shuffle_example():
    tau = Shuffle(Cat(Leaf(I1), Leaf(I2)), Leaf(I3))
    assert sem(tau) == {(I1, I2, I3), (I1, I3, I2), (I3, I1, I2)}


def test_sem_base_cases():
    assert sem(EPS) == {()}
    assert sem(Or(Leaf(I1), Leaf(I1))) == {(I1,)}


def test_sem_rejects_par():
    with pytest.raises(UnsupportedNode):
        sem(Par(Leaf(I1), EPS))


def test_in_lang_E():
    ints = {I1}
    s1, r1 = send("a", "M1"), receive("b", "M1")
    assert in_lang_E((s1, r1), ints)
    assert not in_lang_E((r1,), ints)
    assert not in_lang_E((s1, s1), ints)
    with pytest.raises(ForeignEvent):
        in_lang_E((send("z", "M9"),), ints)


@given(interaction_terms())
def test_union_and_intersection_laws(tau):
    other = leaf("a", "b", "Z9")
    assert sem(Or(tau, other)) == sem(tau) | sem(other)
    from enact.terms import And
    assert sem(And(tau, other)) <= sem(tau)


def test_sequence_and_shuffle_traces_have_full_length():
    rng = random.Random(4)
    for _ in range(50):
        n = rng.randint(1, 5)
        tau = random_term(rng, n, ops=(Cat, Shuffle), eps_rate=0.0)
        assert all(len(t) == n for t in sem(tau))
        assert all(set(t) == interactions_of(tau) for t in sem(tau))


def test_shuffle_matches_permutation_oracle():
    rng = random.Random(7)
    for _ in range(30):
        left = random_term(rng, 2, ops=(Cat, Shuffle, Or), eps_rate=0)
        right = random_term(rng, 2, ops=(Cat, Shuffle, Or), eps_rate=0)
        right = _rename(right, "N")
        expected = set()
        for t1 in sem(left):
            for t2 in sem(right):
                expected |= brute_interleavings(t1, t2)
        assert sem(Shuffle(left, right)) == expected


def _rename(tau, prefix):
    if isinstance(tau, Leaf):
        e = tau.event
        return Leaf(Interaction(e.sender, e.receiver, prefix + e.message))
    if hasattr(tau, "left"):
        return type(tau)(_rename(tau.left, prefix), _rename(tau.right, prefix))
    return tau
