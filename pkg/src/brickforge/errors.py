"""Exception hierarchy shared by every brickforge module."""


class BrickforgeError(Exception):
    """Base class for all errors raised by brickforge."""


class ArithmeticOverflow(BrickforgeError, OverflowError):
    """A value left the 127-bit unsigned range."""


class InvalidInput(BrickforgeError, ValueError):
    pass


class NotATriple(InvalidInput):
    pass


class NotPrimitive(InvalidInput):
    pass


class InvalidParams(InvalidInput):
    pass


class NotEulerBrick(InvalidInput):
    pass


class DegenerateEdge(InvalidInput):
    """A construction produced a zero-length edge."""


class NonCanonicalizable(BrickforgeError, ValueError):
    """Two edges share the same 2-adic valuation, so no strict ordering exists."""


class HypothesisNotMet(BrickforgeError, ValueError):
    pass


class VerificationFailure(BrickforgeError, RuntimeError):
    """A result failed its independent re-check. This indicates a bug."""


class CorruptCheckpoint(BrickforgeError, ValueError):
    pass


class BoundMismatch(BrickforgeError, ValueError):
    pass


class UnsafeBound(BrickforgeError, ValueError):
    def __init__(self, message: str, max_safe: int):
        super().__init__(message)
        self.max_safe = max_safe
