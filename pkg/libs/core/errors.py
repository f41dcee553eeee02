"""Custom exceptions for the wall-crossing calculator."""

from typing import Optional


class WallCalcError(Exception):
    """Base exception for all calculator errors."""
    pass


class PolynomialError(WallCalcError):
    """Raised when a polynomial operation has no integer answer."""
    pass


class NotDivisibleError(PolynomialError):
    """Raised when an exact division leaves a remainder."""

    def __init__(self, message: str, remainder):
        super().__init__(message)
        self.remainder = remainder


class MalformedLiteralError(PolynomialError):
    """Raised when a polynomial literal cannot be parsed."""

    def __init__(self, message: str, offset: int = 0):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class AtomDomainError(WallCalcError):
    """Raised when an atom space is requested outside its parameter range."""
    pass


class NotABundleError(AtomDomainError):
    """Raised when a relative Hilbert scheme has no projective-bundle closed form."""
    pass


class EvaluationError(WallCalcError):
    """Raised when a space expression cannot be evaluated."""
    pass


class UnboundIdentifierError(EvaluationError):
    """Raised when an identifier is missing from the evaluation environment."""

    def __init__(self, name: str):
        super().__init__(f"unbound identifier '{name}'")
        self.name = name


class ScenarioError(WallCalcError):
    """Raised when a scenario file is rejected; carries a source position."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class ScenarioSyntaxError(ScenarioError):
    """Raised on a grammar violation or malformed literal in a scenario."""
    pass


class UnresolvedNameError(ScenarioError):
    """Raised when a scenario references an identifier before declaring it."""
    pass


class UnknownModelError(ScenarioError):
    """Raised when an expectation names a model that was never declared."""
    pass


class ConfigurationError(WallCalcError):
    """Raised when configuration is invalid."""
    pass


class ValidationError(WallCalcError):
    """Raised when ledger arguments violate their preconditions."""

    def __init__(self, message: str, field: Optional[str] = None):
        super().__init__(message)
        self.field = field
