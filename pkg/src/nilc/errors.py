"""Exception hierarchy.

Every domain error derives from :class:`NilcError`; the CLI maps these to
exit code 3 and echoes the class name.
"""


class NilcError(ValueError):
    """Base class for all domain errors raised by this package."""


class InvalidRank(NilcError):
    pass


class NotARoot(NilcError):
    pass


class NotStronglyOrthogonal(NilcError):
    pass


class NonUniqueMaximum(NilcError):
    pass


class ChainMismatch(NilcError):
    pass


class NotInCatalogue(NilcError):
    pass


class EmptySet(NilcError):
    pass


class HeightOutOfRange(NilcError):
    pass


class NotInOrtX(NilcError):
    pass


class NotADescent(NilcError):
    pass


class TooLong(NilcError):
    pass
