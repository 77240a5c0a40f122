"""Exception hierarchy.

Every precondition failure has its own class so the CLI can report it
precisely. All of them derive from ``ValueError`` via :class:`CoreError`.
"""


class CoreError(ValueError):
    """Base class for invalid input to any corepaths operation."""


class InvalidPartitionError(CoreError):
    pass


class InvalidBetaSetError(CoreError):
    pass


class NotCoprimeError(CoreError):
    pass


class NotInPosetError(CoreError):
    """An integer or coordinate that is not an element of the gap poset."""


class NotAnOrderIdealError(CoreError):
    pass


class NotACoreError(CoreError):
    pass


class RepeatedPartsError(CoreError):
    """Repeated parts, or equivalently two adjacent integers in a beta-set."""


class WrongSideError(CoreError):
    pass


class NotBalancedError(CoreError):
    pass


class InvalidPathError(CoreError):
    pass


class PathEndpointError(InvalidPathError):
    pass


class PathLengthError(InvalidPathError):
    pass


class EvenModulusError(CoreError):
    pass


class EnumerationGuardError(CoreError):
    """Refused to enumerate because the instance exceeds the configured size guard."""


class VerificationError(AssertionError):
    """A brute-force cross-check disagreed with the bijection.

    ``record`` holds the offending instance as a JSON-serialisable dict.
    """

    def __init__(self, message, record=None):
        super().__init__(message)
        self.record = record or {}
