"""Agents, events and trace-expression terms.

Agents and message labels are plain identifier strings; the event and
term classes validate them on construction. Every value here is a frozen
dataclass, so terms are hashable and compare structurally.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Union

from .errors import MixedProtocol

IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


def check_ident(name: str, what: str) -> str:
    if not isinstance(name, str) or not IDENT.match(name):
        raise ValueError(f"invalid {what} name {name!r}")
    return name


class Kind(enum.Enum):
    SEND = "!"
    RECEIVE = "?"


@dataclass(frozen=True, order=True)
class Interaction:
    """Global view of one message exchange, ``sender -> receiver : message``."""

    sender: str
    receiver: str
    message: str

    def __post_init__(self):
        check_ident(self.sender, "agent")
        check_ident(self.receiver, "agent")
        check_ident(self.message, "message")

    # cached in the instance dict; the dataclass fields stay frozen
    @cached_property
    def send(self) -> MessageEvent:
        return MessageEvent(Kind.SEND, self.sender, self.message)

    @cached_property
    def receive(self) -> MessageEvent:
        return MessageEvent(Kind.RECEIVE, self.receiver, self.message)

    def sort_key(self):
        return (2, self.sender, self.receiver, self.message)

    def __str__(self):
        return f"{self.sender}->{self.message}->{self.receiver}"


@dataclass(frozen=True)
class MessageEvent:
    """Local view: ``aM!`` (agent a sends M) or ``bM?`` (agent b receives M)."""

    kind: Kind
    agent: str
    message: str
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        check_ident(self.agent, "agent")
        check_ident(self.message, "message")
        object.__setattr__(self, "_hash", hash((self.kind.value, self.agent, self.message)))

    def __hash__(self):
        return self._hash

    @property
    def is_send(self) -> bool:
        return self.kind is Kind.SEND

    def sort_key(self):
        return (0 if self.is_send else 1, self.agent, self.message)

    def __str__(self):
        return f"{self.agent}{self.message}{self.kind.value}"


def send(agent: str, message: str) -> MessageEvent:
    return MessageEvent(Kind.SEND, agent, message)


def receive(agent: str, message: str) -> MessageEvent:
    return MessageEvent(Kind.RECEIVE, agent, message)


Event = Union[Interaction, MessageEvent]
Trace = tuple  # tuple[Event, ...]
TraceSet = frozenset  # frozenset[Trace]


def trace_key(trace: Trace):
    """Length-lexicographic key over the events' (kind, agent, message) triples."""
    return (len(trace), tuple(e.sort_key() for e in trace))


def canonical(traces: Iterable[Trace]) -> list:
    return sorted(set(traces), key=trace_key)


def show_trace(trace: Trace) -> str:
    return " ".join(str(e) for e in trace) if trace else "<>"


# --- terms -----------------------------------------------------------------


class Term:
    """Base of all trace-expression nodes."""

    __slots__ = ()

    def children(self) -> tuple:
        return ()


@dataclass(frozen=True)
class Eps(Term):
    def __str__(self):
        return "eps"


@dataclass(frozen=True)
class Leaf(Term):
    event: Event


@dataclass(frozen=True)
class Binary(Term):
    left: Term
    right: Term
    # cached so repeated hashing in memoised semantics stays linear
    _hash: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash((type(self).__name__, self.left, self.right)))

    def __hash__(self):
        return self._hash

    def children(self) -> tuple:
        return (self.left, self.right)


@dataclass(frozen=True, eq=True)
class Cat(Binary):
    symbol = "."
    __hash__ = Binary.__hash__


@dataclass(frozen=True, eq=True)
class And(Binary):
    symbol = "/\\"
    __hash__ = Binary.__hash__


@dataclass(frozen=True, eq=True)
class Or(Binary):
    symbol = "\\/"
    __hash__ = Binary.__hash__


@dataclass(frozen=True, eq=True)
class Shuffle(Binary):
    symbol = "|"
    __hash__ = Binary.__hash__


@dataclass(frozen=True, eq=True)
class Par(Binary):
    """Agent-level parallel composition; only built by distribution."""

    symbol = "||"
    __hash__ = Binary.__hash__


EPS = Eps()


def leaf(sender: str, receiver: str, message: str) -> Leaf:
    return Leaf(Interaction(sender, receiver, message))


def walk(tau: Term, path: tuple = ()) -> Iterator[tuple[tuple, Term]]:
    """Pre-order traversal yielding ``(path, node)``; paths are child-index tuples."""
    yield path, tau
    for i, child in enumerate(tau.children()):
        yield from walk(child, path + (i,))


def leaves(tau: Term) -> Iterator[Event]:
    for _, node in walk(tau):
        if isinstance(node, Leaf):
            yield node.event


def is_interaction_protocol(tau: Term) -> bool:
    return all(isinstance(e, Interaction) for e in leaves(tau))


def is_message_protocol(tau: Term) -> bool:
    return all(isinstance(e, MessageEvent) for e in leaves(tau))


def interactions_of(tau: Term) -> frozenset:
    out = set()
    for e in leaves(tau):
        if not isinstance(e, Interaction):
            raise MixedProtocol(f"message event {e} in an interaction protocol")
        out.add(e)
    return frozenset(out)


def events_of(interactions: Iterable[Interaction]) -> frozenset:
    out = set()
    for i in interactions:
        out.add(i.send)
        out.add(i.receive)
    return frozenset(out)


def agents_of(tau: Term) -> list[str]:
    names = set()
    for i in interactions_of(tau):
        names.update((i.sender, i.receiver))
    return sorted(names)


def event_count(tau: Term) -> int:
    """Number of message events the protocol's interactions give rise to."""
    return len(events_of(interactions_of(tau)))


# --- validation ------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str
    subterm: Term

    def __str__(self):
        return f"{self.kind}: {self.detail}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self):
        if self.ok:
            return "ok"
        return "; ".join(str(v) for v in self.violations)


def _separated_by_and(tau: Term, p: tuple, q: tuple) -> bool:
    n = 0
    while n < min(len(p), len(q)) and p[n] == q[n]:
        n += 1
    node = tau
    for i in p[:n]:
        node = node.children()[i]
    return isinstance(node, And)


def validate(tau: Term) -> ValidationReport:
    """Collect every structural problem in ``tau``; never raises."""
    found = []
    occurrences: dict = {}
    for path, node in walk(tau):
        if isinstance(node, Par):
            found.append(Violation("ParInInput", "parallel composition is not user syntax", node))
        elif isinstance(node, Leaf):
            occurrences.setdefault(node.event, []).append((path, node))
            e = node.event
            if isinstance(e, Interaction) and e.sender == e.receiver:
                found.append(Violation("SelfInteraction", f"{e.sender} sends {e.message} to itself", node))

    kinds = {type(e) for e in occurrences}
    if len(kinds) > 1:
        found.append(Violation("MixedLeaves", "interactions and message events in one protocol", tau))

    by_label: dict = {}
    for e in occurrences:
        if isinstance(e, Interaction):
            by_label.setdefault((e.message,), set()).add(e)
        else:
            by_label.setdefault((e.message, e.kind), set()).add(e)
    for label, events in sorted(by_label.items(), key=lambda kv: str(kv[0])):
        if len(events) > 1:
            first = occurrences[min(events, key=lambda e: e.sort_key())][0][1]
            found.append(Violation("DuplicateMessage", f"message {label[0]} used by distinct events", first))

    for e, occ in occurrences.items():
        for i in range(len(occ)):
            for j in range(i + 1, len(occ)):
                if not _separated_by_and(tau, occ[i][0], occ[j][0]):
                    found.append(Violation("RepeatedEvent", f"{e} repeated outside an intersection", occ[j][1]))
    return ValidationReport(tuple(found))
