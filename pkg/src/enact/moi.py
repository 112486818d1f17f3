"""Message-ordering interpretations and the event semantics they induce.

An interaction protocol fixes an order between interactions; a message
ordering interpretation (MOI) says which event of the first interaction
must come before which event of the second:

    SS  send of the first before send of the second
    SR  send of the first before receive of the second
    RS  receive of the first before send of the second
    RR  receive of the first before receive of the second
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .errors import UnsupportedNode
from .semantics import interleave, shuffle_sets
from .terms import And, Cat, Eps, Interaction, Leaf, Or, Par, Shuffle, Term


class Moi(enum.Enum):
    SS = "SS"
    SR = "SR"
    RS = "RS"
    RR = "RR"

    @classmethod
    def parse(cls, text: str) -> "Moi":
        return cls(text.upper())


# Column order used by the verdict tables.
MOI_COLUMNS = (Moi.RS, Moi.RR, Moi.SS, Moi.SR)


def transitive_closure(pairs) -> frozenset:
    closure = set(pairs)
    while True:
        extra = {(x, w) for (x, y) in closure for (z, w) in closure if y == z} - closure
        if not extra:
            return frozenset(closure)
        closure |= extra


@dataclass(frozen=True)
class Poset:
    elements: frozenset = frozenset()
    order: frozenset = frozenset()

    def __or__(self, other: "Poset") -> "Poset":
        return Poset(self.elements | other.elements, transitive_closure(self.order | other.order))

    def then(self, other: "Poset") -> "Poset":
        bridge = {(x, y) for x in maximal(self) for y in minimal(other)}
        return Poset(self.elements | other.elements, transitive_closure(self.order | other.order | bridge))


def minimal(p: Poset) -> frozenset:
    return frozenset(x for x in p.elements if not any(y == x for (_, y) in p.order))


def maximal(p: Poset) -> frozenset:
    return frozenset(x for x in p.elements if not any(y == x for (y, _) in p.order))


@lru_cache(maxsize=4096)
def poset(tau: Term) -> Poset:
    """Order induced on interactions by the sequencing structure of ``tau``."""
    if isinstance(tau, Eps):
        return Poset()
    if isinstance(tau, Leaf):
        return Poset(frozenset((tau.event,)))
    if isinstance(tau, Cat):
        return poset(tau.left).then(poset(tau.right))
    if isinstance(tau, (And, Or, Shuffle)):
        return poset(tau.left) | poset(tau.right)
    raise UnsupportedNode(f"poset undefined for {type(tau).__name__}")


def _occurs_before(trace, e1, e2) -> bool:
    try:
        i = trace.index(e1)
    except ValueError:
        return False
    return e2 in trace[i:]


def moi_before(moi: Moi, trace, i1: Interaction, i2: Interaction) -> bool:
    """Whether ``i1`` comes before ``i2`` in ``trace`` under ``moi``.

    Absent events make the predicate false.
    """
    first = i1.send if moi in (Moi.SS, Moi.SR) else i1.receive
    second = i2.send if moi in (Moi.SS, Moi.RS) else i2.receive
    return _occurs_before(trace, first, second)


@lru_cache(maxsize=4096)
def sem_moi(tau: Term, moi: Moi) -> frozenset:
    """Event traces of an interaction protocol under ``moi``."""
    if isinstance(tau, Eps):
        return frozenset(((),))
    if isinstance(tau, Leaf):
        i = tau.event
        return frozenset(((i.send, i.receive),))
    if isinstance(tau, And):
        return sem_moi(tau.left, moi) & sem_moi(tau.right, moi)
    if isinstance(tau, Or):
        return sem_moi(tau.left, moi) | sem_moi(tau.right, moi)
    if isinstance(tau, Shuffle):
        return shuffle_sets(sem_moi(tau.left, moi), sem_moi(tau.right, moi))
    if isinstance(tau, Cat):
        pairs = [(x, y) for x in maximal(poset(tau.left)) for y in minimal(poset(tau.right))]
        out = set()
        for t1 in sem_moi(tau.left, moi):
            for t2 in sem_moi(tau.right, moi):
                for t in interleave(t1, t2):
                    if all(moi_before(moi, t, x, y) for x, y in pairs):
                        out.add(t)
        return frozenset(out)
    if isinstance(tau, Par):
        raise UnsupportedNode("Par has no MOI semantics")
    raise UnsupportedNode(f"unknown node {tau!r}")
