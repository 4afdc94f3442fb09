"""Exception types shared across sturmlab."""


class SturmlabError(Exception):
    """Base class for all sturmlab errors."""


class InvalidSlope(SturmlabError, ValueError):
    """Slope construction rejected (rational, zero, or malformed parameters)."""


class SlopeSyntaxError(InvalidSlope):
    """A slope expression failed to parse; the message names the offending token."""


class CoefficientsExhausted(SturmlabError):
    """A partial-quotient source ran out before the requested index."""


class RefinementBudgetExceeded(SturmlabError):
    """An exact comparison or floor did not resolve within the refinement budget.

    For genuine irrationals every comparison terminates; hitting the budget
    almost always means a rational value was smuggled in through a tail rule.
    """


class SafetyCapExceeded(SturmlabError):
    """A window scan exceeded its safety cap without collecting enough factors."""


class RecurrenceMismatch(SturmlabError):
    """The three-term permutation recurrence produced a non-bijection."""


class NotInImage(SturmlabError, ValueError):
    """A matrix is not the image of any permutation under the representation."""


class SingularParameters(SturmlabError, ValueError):
    """Conjugation matrix parameters (a, b) make the matrix singular."""


class WitnessCollision(SturmlabError):
    """Two multiples of a cell witness landed on the same fractional part."""


class InternalInvariantViolation(SturmlabError):
    """An internal construction produced an impossible state; always a bug."""
