"""
Exception hierarchy for chevlab.
Typed outcomes that are not failures (NotInCell, Unsplittable) live next to
the operations that return them.
"""
from typing import Optional


class ChevlabError(Exception):
    """Base class for every error raised by chevlab."""


class InvalidSpec(ChevlabError):
    """A ring or root-system specification violates its invariants."""


class RingSpecSyntaxError(InvalidSpec):
    """A ring-spec string could not be parsed."""

    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}" + (f" in {text!r}" if text else ""))


class NotLocal(ChevlabError):
    pass


class UnsupportedType(ChevlabError):
    pass


class RankTooSmall(ChevlabError):
    pass


class OppositeRoots(ChevlabError):
    pass


class LengthMismatch(ChevlabError):
    pass


class NotAUnit(ChevlabError):
    def __init__(self, element: str, ring: Optional[str] = None):
        self.element = element
        super().__init__(f"{element} is not a unit" + (f" in {ring}" if ring else ""))


class NotLongRoot(ChevlabError):
    pass


class NicePairViolation(ChevlabError):
    pass


class NotAHomomorphism(ChevlabError):
    pass


class BudgetExceeded(ChevlabError):
    def __init__(self, what: str, budget: int):
        self.what = what
        self.budget = budget
        super().__init__(f"{what} exceeded budget of {budget:,}")


class PreconditionFailed(ChevlabError):
    pass


class HypothesisFailed(ChevlabError):
    pass
