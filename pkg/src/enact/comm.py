"""Communication models as languages of well-formed event traces.

    CM1  realisable with synchronous communication: a send is immediately
         followed by its receive
    CM2  FIFO n-n: global send order is the global receive order
    CM3  FIFO 1-n: as CM2, for messages from the same sender
    CM4  FIFO n-1: as CM2, for messages to the same receiver
    CM5  causal: causally ordered sends between the same pair of agents
         are received in that order
    CM6  fully asynchronous: no constraint beyond well-formedness
"""
from __future__ import annotations

import enum

from .errors import ForeignEvent, NotWellFormed
from .semantics import in_lang_E


class CommModel(enum.Enum):
    CM1 = 1
    CM2 = 2
    CM3 = 3
    CM4 = 4
    CM5 = 5
    CM6 = 6

    @classmethod
    def parse(cls, text: str) -> "CommModel":
        return cls[text.upper()]

    def __str__(self):
        return self.name


def causal_before(trace, e1, e2) -> bool:
    """Causal precedence between two send events of ``trace``.

    Base case: same sender or same message, and ``e1`` strictly earlier.
    Inductive case: some send event ``ev`` with e1 < ev < e2 causally.
    Computed as the transitive closure of the base relation over sends.
    """
    sends = [(k, e) for k, e in enumerate(trace) if e.is_send]
    succ = {e: set() for _, e in sends}
    for i, a in sends:
        for j, b in sends:
            if i < j and (a.agent == b.agent or a.message == b.message):
                succ[a].add(b)
    if e1 not in succ:
        return False
    seen, todo = set(), [e1]
    while todo:
        for nxt in succ[todo.pop()]:
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return e2 in seen


def _fifo(trace, interactions, related) -> bool:
    pos = {e: k for k, e in enumerate(trace)}
    present = [
        (pos[i.send], pos[i.receive], i)
        for i in interactions
        if i.send in pos and i.receive in pos
    ]
    for k, ri, a in present:
        for l, rj, b in present:
            if related(a, b) and k < l and not ri < rj:
                return False
    return True


def in_cm(cm: CommModel, trace, interactions) -> bool:
    if not in_lang_E(trace, interactions):
        raise NotWellFormed("trace is not well formed: " + " ".join(map(str, trace)))
    if cm is CommModel.CM1:
        receive_of = {i.send: i.receive for i in interactions}
        return all(
            trace[k] == receive_of[trace[k - 1]]
            for k in range(1, len(trace))
            if trace[k - 1] in receive_of
        )
    if cm is CommModel.CM2:
        return _fifo(trace, interactions, lambda a, b: True)
    if cm is CommModel.CM3:
        return _fifo(trace, interactions, lambda a, b: a.sender == b.sender)
    if cm is CommModel.CM4:
        return _fifo(trace, interactions, lambda a, b: a.receiver == b.receiver)
    if cm is CommModel.CM5:
        pos = {e: k for k, e in enumerate(trace)}
        for a in interactions:
            for b in interactions:
                if (a.sender, a.receiver) != (b.sender, b.receiver):
                    continue
                if a.receive in pos and b.receive in pos and causal_before(trace, a.send, b.send):
                    if not pos[a.receive] < pos[b.receive]:
                        return False
        return True
    return True


def filter_cm(cm: CommModel, traces, interactions) -> frozenset:
    """Intersect ``traces`` with the language of ``cm``; ill-formed traces drop out."""
    interactions = frozenset(interactions)
    out = set()
    for t in traces:
        try:
            if in_lang_E(t, interactions) and in_cm(cm, t, interactions):
                out.add(t)
        except ForeignEvent:
            continue
    return frozenset(out)
