"""Exception types raised across the package."""


class DeepHoleError(Exception):
    """Base class for all package errors."""


class NotPrime(DeepHoleError, ValueError):
    pass


class ReducibleModulus(DeepHoleError, ValueError):
    pass


class DegreeMismatch(DeepHoleError, ValueError):
    pass


class FieldTooLarge(DeepHoleError, ValueError):
    pass


class DivisionByZero(DeepHoleError, ZeroDivisionError):
    pass


class MixedFields(DeepHoleError, TypeError):
    pass


class DivisionByZeroPoly(DivisionByZero):
    pass


class DegreeTooHigh(DeepHoleError, ValueError):
    pass


class LengthMismatch(DeepHoleError, ValueError):
    pass


class MessageDegreeTooHigh(DegreeTooHigh):
    pass


class SearchSpaceTooLarge(DeepHoleError, RuntimeError):
    pass


class InexactDivision(DeepHoleError, ArithmeticError):
    """A division that must be exact left a remainder (an internal bug)."""


class NotDeepHoleShape(DeepHoleError, ValueError):
    pass


class DegreeOutOfRange(DeepHoleError, ValueError):
    pass


class HypothesisViolated(DeepHoleError, ValueError):
    pass


class RowMismatch(DeepHoleError, AssertionError):
    def __init__(self, table, failures):
        self.table = table
        self.failures = failures
        lines = [f"table {table}: {len(failures)} row assertion(s) failed"]
        lines += [f"  row {row}: {name}: expected {exp!r}, got {got!r}"
                  for row, name, exp, got in failures]
        super().__init__("\n".join(lines))
