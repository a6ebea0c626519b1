"""Exception hierarchy for ldicode.

Every error raised deliberately by the library derives from :class:`LDIError`,
and additionally from the closest builtin so that generic ``except ValueError``
handlers keep working.
"""


class LDIError(Exception):
    """Base class for all library errors."""


class NonPrimeModulus(LDIError, ValueError):
    pass


class ZeroNoInverse(LDIError, ZeroDivisionError):
    """Raised when inverting an element congruent to zero."""


class SameModulus(LDIError, ValueError):
    """Target prime equals the source local dimension, so ``q mod p`` is zero."""


class DimensionMismatch(LDIError, ValueError):
    pass


# vectors and matrices share the same failure mode
LengthMismatch = DimensionMismatch


class ModulusMismatch(LDIError, ValueError):
    pass


class RegisterOutOfRange(LDIError, IndexError):
    pass


class RowOutOfRange(LDIError, IndexError):
    pass


class DuplicateRegister(LDIError, ValueError):
    pass


class YRequiresQubit(LDIError, ValueError):
    pass


class DependentGenerators(LDIError, ValueError):
    pass


class NoCanonicalForm(LDIError, ValueError):
    """No sequence of row operations, register swaps and Hadamards yields ``[I_k X2 | Z1 Z2]``."""


class InstanceTooLarge(LDIError, ValueError):
    pass


class ParseError(LDIError, ValueError):
    """Malformed Pauli string or code file.

    ``line`` and ``column`` are 1-based and may be ``None`` when the error is
    not tied to a position.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "")
            message = f"{where}: {message}"
        super().__init__(message)


class HeaderMismatch(ParseError):
    pass
