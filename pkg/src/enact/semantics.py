"""Finite trace-set semantics of trace expressions.

Traces are tuples of events and trace sets are frozensets of traces. Every
operator is enumerated explicitly, so costs grow exponentially with the
number of events under shuffle.
"""
from __future__ import annotations

from functools import lru_cache
from math import comb

from .errors import ForeignEvent, UnsupportedNode
from .terms import And, Cat, Eps, Leaf, Or, Par, Shuffle, Term, events_of


@lru_cache(maxsize=1 << 16)
def interleave(t1: tuple, t2: tuple) -> frozenset:
    """All merges of ``t1`` and ``t2`` that keep each input's internal order."""
    if not t1:
        return frozenset((t2,))
    if not t2:
        return frozenset((t1,))
    head1 = {(t1[0],) + rest for rest in interleave(t1[1:], t2)}
    head2 = {(t2[0],) + rest for rest in interleave(t1, t2[1:])}
    return frozenset(head1 | head2)


def interleave_count(n1: int, n2: int) -> int:
    return comb(n1 + n2, n1)


def shuffle_sets(s1, s2) -> frozenset:
    out = set()
    for t1 in s1:
        for t2 in s2:
            out |= interleave(t1, t2)
    return frozenset(out)


def concat_sets(s1, s2) -> frozenset:
    return frozenset(t1 + t2 for t1 in s1 for t2 in s2)


@lru_cache(maxsize=4096)
def sem(tau: Term) -> frozenset:
    """Standard denotation of a ``Par``-free term as a finite set of traces."""
    if isinstance(tau, Eps):
        return frozenset(((),))
    if isinstance(tau, Leaf):
        return frozenset(((tau.event,),))
    if isinstance(tau, Cat):
        return concat_sets(sem(tau.left), sem(tau.right))
    if isinstance(tau, And):
        return sem(tau.left) & sem(tau.right)
    if isinstance(tau, Or):
        return sem(tau.left) | sem(tau.right)
    if isinstance(tau, Shuffle):
        return shuffle_sets(sem(tau.left), sem(tau.right))
    if isinstance(tau, Par):
        raise UnsupportedNode("Par is only interpreted by the distributed semantics")
    raise UnsupportedNode(f"unknown node {tau!r}")


def in_lang_E(trace, interactions) -> bool:  # noqa: N802
    """Each send and each receive at most once; every receive after its send."""
    alphabet = events_of(interactions)
    for e in trace:
        if e not in alphabet:
            raise ForeignEvent(f"{e} is not an event of the given interactions")
    sends = {i.message: i.send for i in interactions}
    seen = set()
    for e in trace:
        if e in seen:
            return False
        seen.add(e)
        if not e.is_send and sends.get(e.message) not in seen:
            return False
    return True
