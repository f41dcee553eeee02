"""Pydantic models for reports and CLI tables."""

from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator


class CheckResult(BaseModel):
    """One expected-versus-computed comparison."""
    model_config = ConfigDict(populate_by_name=True)

    name: str
    expected: str
    computed: Optional[str] = None
    residual: Optional[str] = None
    passed: bool = Field(..., alias="pass")
    error: Optional[str] = None


class ModelResult(BaseModel):
    """Value (or failure) of one scenario model."""
    name: str
    value: Optional[str] = None
    error: Optional[str] = None


class Diagnostic(BaseModel):
    """Informational row; reported, never asserted."""
    name: str
    value: str


class VerificationReport(BaseModel):
    """Result of running a scenario or the built-in verification."""
    scenario: str
    checks: List[CheckResult] = []
    models: List[ModelResult] = []
    diagnostics: List[Diagnostic] = []

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks) and all(m.error is None for m in self.models)

    def to_json(self, indent: Optional[int] = 2) -> str:
        return self.model_dump_json(by_alias=True, indent=indent)


class WallRow(BaseModel):
    """One destabilizing candidate of a wall."""
    alpha: str
    sub: str
    quotient: str
    quotient_points: int = Field(..., ge=0)


class ExtensionRow(BaseModel):
    """Forward and reverse extension dimensions of one wall type."""
    label: str
    alpha: str
    forward: int = Field(..., ge=0)
    reverse: int = Field(..., ge=0)


class ChiSummary(BaseModel):
    """Euler-pairing bookkeeping for one class (d, chi)."""
    d: int = Field(..., ge=1)
    chi: int
    chi_pair_self: int
    expected_dim: int
    point_count: int
    infinity_model: Optional[str] = None
    infinity_model_error: Optional[str] = None
    extensions: List[ExtensionRow] = []


class AtomRow(BaseModel):
    """Closed-form polynomial of one atom space."""
    name: str
    polynomial: str
    degree: int
    euler: int
    palindromic: bool

    @field_validator("polynomial")
    def validate_polynomial(cls, v):
        if not v:
            raise ValueError("polynomial text must be non-empty")
        return v
