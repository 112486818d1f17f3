"""Projection onto agents and the decision-threaded distributed semantics."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache, reduce
from itertools import product

from .errors import ShapeMismatch, UnsupportedNode
from .moi import minimal, poset
from .semantics import concat_sets, shuffle_sets
from .terms import (
    EPS, And, Binary, Cat, Eps, Interaction, Leaf, MessageEvent, Or, Par, Shuffle,
    Term, agents_of, receive, send,
)


def project(tau: Term, agent: str) -> Term:
    """Restriction of ``tau`` to ``agent``'s events; the node tree is preserved."""
    if isinstance(tau, Eps):
        return tau
    if isinstance(tau, Leaf):
        e = tau.event
        if isinstance(e, Interaction):
            if e.sender == agent:
                return Leaf(send(e.sender, e.message))
            if e.receiver == agent:
                return Leaf(receive(e.receiver, e.message))
            return EPS
        if isinstance(e, MessageEvent):
            return tau if e.agent == agent else EPS
    if isinstance(tau, Binary):
        return type(tau)(project(tau.left, agent), project(tau.right, agent))
    raise UnsupportedNode(f"cannot project {tau!r}")


def distribute(tau: Term) -> Term:
    """Left-nested ``Par`` of the projections on every agent, in name order."""
    parts = [project(tau, a) for a in agents_of(tau)]
    if not parts:
        return EPS
    return reduce(Par, parts)


def choosers(tau: Term) -> frozenset:
    """Senders of the minimal interactions of ``tau``."""
    return frozenset(i.sender for i in minimal(poset(tau)))


class Decision(enum.Enum):
    L = "L"
    R = "R"
    LR = "LR"
    NONE = "-"


@dataclass(frozen=True)
class DLeaf:
    def __str__(self):
        return "_"


@dataclass(frozen=True)
class DNode:
    op: type
    left: "DLeaf | DNode"
    right: "DLeaf | DNode"
    decision: Decision = Decision.NONE

    @property
    def L(self):  # noqa: N802
        return self.left

    @property
    def R(self):  # noqa: N802
        return self.right

    @property
    def D(self) -> Decision:  # noqa: N802
        if self.op is not Or:
            raise AttributeError("only choice nodes carry a decision")
        return self.decision

    def __str__(self):
        tag = self.decision.value if self.op is Or else ""
        return f"({self.left} {self.op.symbol}{tag} {self.right})"


D_LEAF = DLeaf()


def decision_structures(tau: Term) -> list:
    """Every decision structure of ``tau``.

    A choice whose branches start with interactions sent by one and the same
    agent is resolved consistently (one structure per side); any other
    choice is tagged LR and its branches may be mixed across agents.
    """
    if isinstance(tau, (Eps, Leaf)):
        return [D_LEAF]
    if isinstance(tau, Binary) and not isinstance(tau, Par):
        pairs = list(product(decision_structures(tau.left), decision_structures(tau.right)))
        if isinstance(tau, Or):
            left, right = choosers(tau.left), choosers(tau.right)
            if left == right and len(left) == 1:
                tags = (Decision.L, Decision.R)
            else:
                tags = (Decision.LR,)
            return [DNode(Or, l, r, x) for x in tags for l, r in pairs]
        return [DNode(type(tau), l, r) for l, r in pairs]
    raise UnsupportedNode(f"no decision structure for {tau!r}")


@lru_cache(maxsize=4096)
def sem_with_decision(tau: Term, dt) -> frozenset:
    """Semantics of a (possibly distributed) message protocol following ``dt``."""
    if isinstance(tau, Par):
        return shuffle_sets(sem_with_decision(tau.left, dt), sem_with_decision(tau.right, dt))
    if isinstance(tau, (Eps, Leaf)):
        if not isinstance(dt, DLeaf):
            raise ShapeMismatch(f"decision structure {dt} does not fit a leaf")
        return frozenset(((),)) if isinstance(tau, Eps) else frozenset(((tau.event,),))
    if not isinstance(dt, DNode) or dt.op is not type(tau):
        raise ShapeMismatch(f"decision structure {dt} does not fit {type(tau).__name__}")
    if isinstance(tau, Cat):
        return concat_sets(sem_with_decision(tau.left, dt.L), sem_with_decision(tau.right, dt.R))
    if isinstance(tau, And):
        return sem_with_decision(tau.left, dt.L) & sem_with_decision(tau.right, dt.R)
    if isinstance(tau, Or):
        if dt.D is Decision.R:
            return sem_with_decision(tau.right, dt.R)
        if dt.D is Decision.L:
            return sem_with_decision(tau.left, dt.L)
        return sem_with_decision(tau.right, dt.R) | sem_with_decision(tau.left, dt.L)
    if isinstance(tau, Shuffle):
        return shuffle_sets(sem_with_decision(tau.left, dt.L), sem_with_decision(tau.right, dt.R))
    raise UnsupportedNode(f"unknown node {tau!r}")


@lru_cache(maxsize=1024)
def sem_dist(tau: Term) -> frozenset:
    """Traces of the agents' projections run in parallel, under consistent choices."""
    if not agents_of(tau):
        return frozenset(((),))
    dist = distribute(tau)
    out = set()
    for dt in decision_structures(tau):
        out |= sem_with_decision(dist, dt)
    return frozenset(out)
