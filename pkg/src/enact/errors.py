"""Exception hierarchy shared by the enactability toolkit."""


class EnactError(Exception):
    """Base class for every error raised by this package."""


class MixedProtocol(EnactError):
    """A term mixes interaction leaves with message-event leaves, or has the wrong kind."""


class UnsupportedNode(EnactError):
    """A semantic function met a node it does not interpret (e.g. ``Par``)."""


class ForeignEvent(EnactError):
    """A trace contains an event outside the expected event alphabet."""


class NotWellFormed(EnactError):
    """A trace is not in the well-formed message language."""


class ShapeMismatch(EnactError):
    """A decision structure does not mirror the term it is threaded through."""


class BudgetExceeded(EnactError):
    def __init__(self, events: int, budget: int):
        super().__init__(f"protocol has {events} events, budget is {budget}")
        self.events = events
        self.budget = budget


class UnknownAgent(EnactError):
    def __init__(self, agent: str, known):
        self.agent = agent
        self.known = sorted(known)
        super().__init__(
            f"unknown agent {agent!r}; protocol agents: {', '.join(self.known) or '(none)'}"
        )
