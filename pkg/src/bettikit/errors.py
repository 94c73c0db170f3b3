"""Exception hierarchy shared by every bettikit module."""


class BettikitError(Exception):
    """Base class for all library errors."""


class DivisionByZero(BettikitError, ZeroDivisionError):
    pass


class MixedFields(BettikitError):
    pass


class MixedRings(BettikitError):
    pass


class ZeroDivisor(BettikitError):
    """Raised when taking a colon ideal by the zero polynomial."""


class DegreeCapExceeded(BettikitError):
    pass


class UnitIdeal(BettikitError):
    pass


class FieldTooSmall(BettikitError):
    pass


class NotContained(BettikitError):
    pass


class NotRegularSequence(BettikitError):
    pass


class InsufficientDegree(BettikitError):
    pass


class PreconditionViolated(BettikitError):
    def __init__(self, failures):
        self.failures = list(failures)
        super().__init__("; ".join(self.failures))


class NotMonomial(BettikitError):
    pass


class InJA(BettikitError):
    """The monomial lies in the pure-powers ideal J(a)."""


class ParameterOutOfRange(BettikitError, ValueError):
    pass


class NoSqrtMinusOne(BettikitError):
    pass


class DimensionMismatch(BettikitError):
    pass


class Infeasible(BettikitError):
    pass


class BadCharacteristic(BettikitError, ValueError):
    pass


class UnknownVariable(BettikitError):
    pass


class ParseError(BettikitError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class CharacteristicSensitive(BettikitError):
    """Betti tables differ between two coefficient fields."""
