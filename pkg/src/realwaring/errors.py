"""Exception hierarchy shared by all modules."""


class WaringError(Exception):
    """Base class for domain errors raised by this package."""


class DimensionError(WaringError, ValueError):
    pass


class ZeroFormError(WaringError, ValueError):
    pass


class ParityError(WaringError, ValueError):
    pass


class SingularSystemError(WaringError, ArithmeticError):
    pass


class InconsistentSystemError(WaringError, ArithmeticError):
    pass


class MembershipError(WaringError, ValueError):
    """A parameter point lies outside the admissible set.

    ``reasons`` lists the violated conditions.
    """

    def __init__(self, message, reasons=()):
        super().__init__(message)
        self.reasons = list(reasons)


class NoValidPointError(WaringError, ValueError):
    pass


class ParseError(WaringError, ValueError):
    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class HomogeneityError(ParseError):
    pass


class VerificationError(WaringError, AssertionError):
    """Expansion of a computed decomposition does not reproduce the input."""
