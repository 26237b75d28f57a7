"""Exception types shared across the package."""

from __future__ import annotations


class EvenHoleError(Exception):
    """Base class for every error raised by this package."""


class ParseError(EvenHoleError):
    def __init__(self, line: int, reason: str) -> None:
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class RejectedNonSimple(ParseError):
    """Input describes a self-loop or a repeated edge."""


class OutOfRange(EvenHoleError):
    pass


class OverlapError(EvenHoleError):
    pass


class UnknownEdge(EvenHoleError):
    pass


class BudgetExhausted(EvenHoleError):
    def __init__(self, what: str, budget: int) -> None:
        super().__init__(f"{what}: search budget of {budget} nodes exhausted")
        self.budget = budget


class PreconditionViolated(EvenHoleError):
    pass


class MalformedWitness(EvenHoleError):
    pass


class MalformedJump(EvenHoleError):
    pass


class NotAnEvenHole(EvenHoleError):
    pass


class HoleMismatch(EvenHoleError):
    pass


class Disconnected(EvenHoleError):
    pass


class InvalidSpec(EvenHoleError):
    pass


class GenerationFailed(EvenHoleError):
    pass
