"""Exception hierarchy shared by every stonework module."""


class StoneworkError(Exception):
    pass


class StructureError(StoneworkError):
    """An algebra description is malformed (wrong shape, entry outside the carrier)."""


class ArgumentError(StoneworkError, ValueError):
    """An argument does not belong to the object it is used with."""


class SizeError(StoneworkError):
    """A configured size cap would be exceeded."""


class PreconditionError(StoneworkError):
    pass


class InvariantViolation(StoneworkError):
    """Raised when a result fails its own post-check. Never expected to fire."""


class FormulaSyntaxError(StoneworkError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class LexError(FormulaSyntaxError):
    pass


class ParseError(FormulaSyntaxError):
    pass


class UnknownVariableError(ArgumentError):
    pass
