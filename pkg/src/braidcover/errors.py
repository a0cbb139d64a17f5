"""Exception hierarchy.

Every error raised on purpose by the package derives from
:class:`BraidCoverError`. The CLI maps :class:`InputError` subclasses to exit
status 2 and :class:`DomainError` subclasses to exit status 3.
"""


class BraidCoverError(Exception):
    """Base class for all package errors."""


class InputError(BraidCoverError):
    """Malformed user input."""


class DomainError(BraidCoverError):
    """A mathematical precondition was violated."""


class ParseError(InputError):
    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at offset {position})"
        super().__init__(message)
        self.position = position


class MacroArityError(InputError):
    pass


class StrandRangeError(DomainError):
    pass


class StrandMismatchError(DomainError):
    pass


class BadIndexError(DomainError):
    pass


class BadDecompositionError(DomainError):
    pass


class RankMismatchError(DomainError):
    pass


class NotInvertibleError(DomainError):
    pass


class NonExactDivisionError(DomainError):
    """Division left a nonzero remainder.

    Inside the covering pipeline this means an upstream invariant is broken.
    """


class ZeroPolynomialError(DomainError):
    pass


class NonReciprocalError(DomainError):
    pass


class EmptyWordError(DomainError):
    pass
