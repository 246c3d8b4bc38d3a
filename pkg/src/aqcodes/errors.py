"""Named error types.  The CLI reports each by class name and exits with status 2."""


class CodeError(ValueError):
    """Base class for precondition failures."""


# fields
class NotPrime(CodeError):
    pass


class TooLarge(CodeError):
    pass


class BadDegree(CodeError):
    pass


class DivisionByZero(CodeError, ZeroDivisionError):
    pass


class FieldMismatch(CodeError):
    pass


class OrderUnavailable(CodeError):
    pass


# polynomials and cyclic codes
class NotCoprime(CodeError):
    pass


class NotCosetClosed(CodeError):
    pass


class DuplicateResidues(CodeError):
    pass


class NotDivisor(CodeError):
    pass


class NotMonic(CodeError):
    pass


class LengthMismatch(CodeError):
    pass


class DeltaOutOfRange(CodeError):
    pass


class KOutOfRange(CodeError):
    pass


# weights
class ZeroCode(CodeError):
    pass


class EmptyDifference(CodeError):
    pass


# constructions
class NotNested(CodeError):
    pass


class NonpositiveDimension(CodeError):
    pass


class GaugeOutOfRange(CodeError):
    pass


class InexactDistance(CodeError):
    pass


class RangeViolation(CodeError):
    pass


class TNotInAdmissibleSet(CodeError):
    pass


class HullTooLarge(CodeError):
    pass


# catalog / cli
class SearchSpaceTooLarge(CodeError):
    pass


class SchemaViolation(CodeError):
    pass


class BudgetExceeded(CodeError):
    pass


class UnknownCommand(CodeError):
    pass


class BadFlag(CodeError):
    pass
