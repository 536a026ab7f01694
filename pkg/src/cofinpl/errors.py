"""Exception types shared by every layer of the package.

``DomainError`` covers violated mathematical preconditions; callers that
reached one passed well-formed but inadmissible data.  ``ParseError`` covers
malformed text.  The service maps the former to HTTP 409 and the latter to
422, and the command line turns those into exit codes 3 and 2.
"""


class DomainError(Exception):
    """A precondition on exact input data does not hold."""


class MonotonicityViolation(DomainError):
    """A slope is not positive or a knot sequence is not strictly increasing."""


class DuplicatePoint(DomainError):
    """An excluded-point collection lists the same rational twice."""


class SizeMismatch(DomainError):
    """Two finite sets that must correspond pointwise have different sizes."""


class EmptyInput(DomainError):
    """A construction needs at least one point and received none."""


class EndpointNotFixed(DomainError):
    """A splice endpoint is not a fixed point of the map being spliced."""


class NotIdempotent(DomainError):
    """An argument restricted to idempotents has a non-identity extension."""


class NotGroupHClass(DomainError):
    """The element does not lie in the group of units of its local monoid."""


class DefectMismatch(DomainError):
    """Two elements that must have equal defect do not."""


class ParseError(ValueError):
    """Input text does not match the element grammar."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.message = message
        self.position = position


class UnknownSuite(ValueError):
    """No property suite is registered under the requested name."""
