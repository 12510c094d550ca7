"""Shared exception types for the circenum package."""


class UnsupportedOrderError(ValueError):
    """No counting formula (or oracle coverage) exists for the requested order."""


class ParityError(ValueError):
    """A square-root substitution met an odd exponent."""


class InexactDivisionError(ArithmeticError):
    """A division that must be exact left a remainder (formula transcription bug)."""


class ConsistencyError(RuntimeError):
    """Two formulas that must agree produced different values."""
