"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain where a quantity is defined."""


class InvalidParametersError(ValueError):
    """Scheme or classical parameters do not describe a valid scheme."""


class PreconditionError(ValueError):
    """A lemma or theorem was asked about parameters outside its hypotheses."""


class ConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagree."""


class UsageError(ValueError):
    """Malformed user input (scheme strings, boxes, unknown ids)."""
