"""Scenario AST: bindings, walls, models and golden expectations."""

from dataclasses import dataclass, field
from typing import Optional, Tuple

from libs.motivic.polyring import Polynomial
from libs.motivic.strata import SpaceExpr, WallTerm

SCENARIO_SUFFIX = ".mwc"


@dataclass(frozen=True)
class Binding:
    """``let name = expr``."""
    name: str
    expr: SpaceExpr
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class ModelDecl:
    """``model name = expr`` optionally followed by ``walls``."""
    name: str
    expr: SpaceExpr
    with_walls: bool = False
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Expectation:
    """``expect model == poly"..."``."""
    model: str
    value: Polynomial
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Scenario:
    name: str = "scenario"
    bindings: Tuple[Binding, ...] = ()
    walls: Tuple[WallTerm, ...] = ()
    models: Tuple[ModelDecl, ...] = ()
    expectations: Tuple[Expectation, ...] = ()

    def model(self, name: str) -> Optional[ModelDecl]:
        for decl in self.models:
            if decl.name == name:
                return decl
        return None
