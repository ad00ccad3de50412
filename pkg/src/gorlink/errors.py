"""Exception hierarchy.

Every domain failure derives from :class:`GorlinkError`; the CLI maps those to
exit code 1 and everything else (bad arguments) to exit code 2.
"""

from __future__ import annotations


class GorlinkError(Exception):
    """Base class for domain errors."""


class InvalidHVector(GorlinkError, ValueError):
    pass


class NegativePartialSum(InvalidHVector):
    pass


class NonTerminating(InvalidHVector):
    pass


class NotC2Admissible(GorlinkError):
    pass


class NotG3Admissible(GorlinkError):
    pass


class NotSymmetric(NotG3Admissible):
    pass


class NegativeFirstHalf(NotG3Admissible):
    pass


class NegativeResidual(GorlinkError):
    pass


class EmptyResidual(NegativeResidual):
    """The residual scheme of a link or descent would be empty."""


class ChainInvalid(GorlinkError):
    pass


class BaseCaseParseFailure(GorlinkError):
    pass


class InvalidTypeParams(GorlinkError, ValueError):
    pass


class Inapplicable(GorlinkError):
    pass


class OutOfRange(GorlinkError, ValueError):
    pass


class PreconditionFailure(GorlinkError):
    pass


class SpecialLinearSystem(GorlinkError):
    pass


class NoPartnerAvailable(GorlinkError):
    pass


class DataConflict(GorlinkError):
    pass


class PaperDataError(GorlinkError):
    """The paper data file is malformed or violates its schema."""
