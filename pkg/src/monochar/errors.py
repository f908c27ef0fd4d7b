"""Exception hierarchy.

Every error raised by the library derives from :class:`MonoidError`, which
itself is a :class:`ValueError`.  Contract violations that can only come from
an upstream bug (non-integral Cartan entries and the like) derive from
:class:`ContractViolation`; the CLI maps those to exit status 2.
"""


class MonoidError(ValueError):
    pass


class DegreeMismatch(MonoidError):
    pass


class EmptyGenerators(MonoidError):
    pass


class NotAnElement(MonoidError):
    pass


class RankMismatch(MonoidError):
    pass


class IllDefined(MonoidError):
    pass


class NotAStabilizer(MonoidError):
    pass


class NotInGroup(MonoidError):
    pass


class NotRegular(MonoidError):
    pass


class TooLarge(MonoidError):
    pass


class ContractViolation(MonoidError):
    """Raised when an output invariant fails; indicates a bug, not bad input."""


class NonIntegralResult(ContractViolation):
    pass


class NegativeEntry(ContractViolation):
    pass


class NonIntegralDimension(ContractViolation):
    pass


class NotRegularJClassData(ContractViolation):
    pass
