"""Exception taxonomy shared across the package."""


class SimplieError(Exception):
    """Base class for all package errors."""


class DomainError(SimplieError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class MalformedElementError(SimplieError, ValueError):
    """A Lie element violates grading or admissibility bookkeeping."""


class UnboundGeneratorError(SimplieError, KeyError):
    """A generator occurring in an element has no image under a map."""


class MalformedMapError(SimplieError, ValueError):
    """A generator assignment violates its degree contract."""


class NamingError(SimplieError, ValueError):
    """Generator names collide where disjointness is required."""


class MalformedSpliceError(SimplieError, ValueError):
    """Splice data has a degree/level mismatch or a non-cycle junction."""


class IncompleteSystemError(SimplieError, KeyError):
    """A defining system is missing an entry for a required sub-tuple."""


class BoundError(SimplieError, ValueError):
    """A requested computation exceeds the configured resource bounds."""


class ExpressionParseError(SimplieError, ValueError):
    """An element expression or spec file failed to parse.

    Carries the offending position for CLI error reporting.
    """

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position
