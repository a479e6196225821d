"""Exception hierarchy shared by every module in the package."""


class NegacyclicError(Exception):
    """Base class for all package errors."""


class NotInvertible(NegacyclicError, ZeroDivisionError):
    pass


class DivisionByZero(NegacyclicError, ZeroDivisionError):
    pass


class UndefinedGcd(NegacyclicError, ValueError):
    pass


class FieldMismatch(NegacyclicError, ValueError):
    pass


class ModulusMismatch(NegacyclicError, ValueError):
    pass


class OddLengthRequired(NegacyclicError, ValueError):
    pass


class NotDivisibleSetup(NegacyclicError, ValueError):
    """Divisor is not regular or has a non-unit leading coefficient."""


class BudgetExceeded(NegacyclicError, RuntimeError):
    pass


class NotFree(NegacyclicError, ValueError):
    pass


class NotCoprime(NegacyclicError, ValueError):
    pass


class NoCoprimeForm(NegacyclicError, ValueError):
    """The code has a local component of type <u + a v> and no two-generator form."""


class NotApplicable(NegacyclicError, ValueError):
    pass


class HypothesisUnmet(NegacyclicError, ValueError):
    pass


class ZeroCode(NegacyclicError, ValueError):
    pass


class OutOfRange(NegacyclicError, ValueError):
    pass


class InvariantViolation(NegacyclicError, AssertionError):
    pass


class ParseError(NegacyclicError, ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position
