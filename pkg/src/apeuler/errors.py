"""Exception hierarchy shared by all modules."""


class InvalidArgumentError(ValueError):
    """A precondition on the arguments is violated."""


class OutOfDomainError(ValueError):
    """The requested evaluation point lies outside the supported domain."""


class PrecisionUnreachableError(RuntimeError):
    """The requested target accuracy cannot be met within configured ceilings."""


class InvalidSpecError(ValueError):
    """A product specification fails validation (e.g. a factor leaves the unit disc)."""


class InternalError(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""
