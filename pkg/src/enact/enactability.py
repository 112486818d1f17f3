"""Strong/weak enactability of interaction protocols.

For a protocol, an MOI and a communication model, compare the traces the
projected agents can produce (``D``) with the traces the protocol allows
(``M``), both restricted to the model's language:

* strong  D == M
* weak    D is a proper subset of M
* no      D has traces outside M
"""
from __future__ import annotations

import enum
import os
from dataclasses import dataclass

from .comm import CommModel, filter_cm
from .distribution import sem_dist
from .errors import BudgetExceeded
from .moi import MOI_COLUMNS, Moi, sem_moi
from .terms import Term, canonical, event_count, interactions_of

DEFAULT_BUDGET = 12


def default_budget() -> int:
    return int(os.environ.get("ENACT_BUDGET", DEFAULT_BUDGET))


class Result(enum.Enum):
    STRONG = "strong"
    WEAK = "weak"
    NO = "no"

    @property
    def glyph(self) -> str:
        return {"strong": "Y", "weak": "(Y)", "no": "N"}[self.value]


class Side(enum.Enum):
    ONLY_DISTRIBUTED = "only-distributed"
    ONLY_MOI = "only-moi"


@dataclass(frozen=True)
class Witness:
    trace: tuple
    side: Side


@dataclass(frozen=True)
class Verdict:
    value: Result
    witnesses: tuple = ()

    @property
    def glyph(self) -> str:
        return self.value.glyph


def check_budget(tau: Term, budget: int | None = None) -> int:
    budget = default_budget() if budget is None else budget
    n = event_count(tau)
    if n > budget:
        raise BudgetExceeded(n, budget)
    return n


def compared_sets(tau: Term, moi: Moi, cm: CommModel) -> tuple[frozenset, frozenset]:
    interactions = interactions_of(tau)
    dist = filter_cm(cm, sem_dist(tau), interactions)
    wanted = filter_cm(cm, sem_moi(tau, moi), interactions)
    return dist, wanted


def check(tau: Term, moi: Moi, cm: CommModel, budget: int | None = None) -> Verdict:
    check_budget(tau, budget)
    dist, wanted = compared_sets(tau, moi, cm)
    witnesses = tuple(
        [Witness(t, Side.ONLY_DISTRIBUTED) for t in canonical(dist - wanted)]
        + [Witness(t, Side.ONLY_MOI) for t in canonical(wanted - dist)]
    )
    if dist == wanted:
        return Verdict(Result.STRONG)
    if dist < wanted:
        return Verdict(Result.WEAK, witnesses)
    return Verdict(Result.NO, witnesses)


def matrix(tau: Term, budget: int | None = None) -> dict:
    """Verdicts for every (model, MOI) pair, keyed ``(cm, moi)``, in table order."""
    check_budget(tau, budget)
    return {(cm, moi): check(tau, moi, cm, budget) for cm in CommModel for moi in MOI_COLUMNS}


def witness(tau: Term, moi: Moi, cm: CommModel, limit: int, budget: int | None = None) -> list:
    if limit < 1:
        raise ValueError("limit must be positive")
    return list(check(tau, moi, cm, budget).witnesses[:limit])
