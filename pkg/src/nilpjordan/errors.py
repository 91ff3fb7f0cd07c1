"""Exception hierarchy.

Every error carries an ``exit_code`` used by the command-line front end:
2 precondition violation, 3 cap exceeded, 4 parse/validation error,
5 internal certification failure.
"""


class NilpJordanError(Exception):
    exit_code = 1


class PreconditionError(NilpJordanError):
    exit_code = 2


class CapError(NilpJordanError):
    exit_code = 3


class InputError(NilpJordanError):
    exit_code = 4


class CertificationFailure(NilpJordanError):
    """A claim that the code is supposed to guarantee did not check out.

    This always indicates a bug; results are never returned uncertified.
    """

    exit_code = 5


# field layer
class ConductorMismatch(PreconditionError, ValueError):
    pass


class DivisionByZero(PreconditionError, ZeroDivisionError):
    pass


class OrderExceedsCap(CapError):
    pass


# group layer
class CapExceeded(CapError):
    def __init__(self, cap, message=None):
        self.cap = cap
        super().__init__(message or f"more than {cap} elements generated")


class OrderCapExceeded(CapError):
    pass


class NotNormal(PreconditionError):
    pass


class NotAHomomorphism(PreconditionError):
    pass


class NotClassTwo(PreconditionError):
    pass


class NotGenerating(PreconditionError):
    pass


class NotPrime(PreconditionError):
    pass


class PrimeDoesNotDivideOrder(PreconditionError):
    pass


class QuotientNotAbelian(PreconditionError):
    pass


class NotAbelian(PreconditionError):
    pass


class GammaNotAbelian(PreconditionError):
    pass


class ExponentNotDividingConductor(PreconditionError):
    pass


class IncompatibleElements(PreconditionError, ValueError):
    pass


# input layer
class ParseError(InputError):
    def __init__(self, line, column, message):
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"line {line}, column {column}: {message}")


class ValidationError(InputError):
    pass


class IndexOutOfRange(NilpJordanError, IndexError):
    pass
