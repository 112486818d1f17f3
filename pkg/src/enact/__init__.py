"""Enactability of agent interaction protocols written as trace expressions."""
from .comm import CommModel, causal_before, filter_cm, in_cm
from .distribution import (
    Decision, DLeaf, DNode, decision_structures, distribute, project, sem_dist,
    sem_with_decision,
)
from .distribution import choosers as agents_of_min
from .enactability import Result, Side, Verdict, Witness, check, matrix, witness
from .errors import (
    BudgetExceeded, EnactError, ForeignEvent, MixedProtocol, NotWellFormed,
    ShapeMismatch, UnknownAgent, UnsupportedNode,
)
from .moi import Moi, Poset, maximal, minimal, moi_before, poset, sem_moi
from .parser import ProtocolFile, ProtocolSyntaxError, ValidationError, load, parse, pretty
from .semantics import in_lang_E, interleave, sem
from .terms import (
    EPS, And, Cat, Eps, Interaction, Kind, Leaf, MessageEvent, Or, Par, Shuffle,
    events_of, interactions_of, leaf, receive, send, validate,
)

__version__ = "0.1.0"
