"""Canonical text for scenarios; parsing the output gives back an equal Scenario."""

from typing import Iterable, List

from libs.motivic.motives import AtomKind
from libs.motivic.polyring import Polynomial, format_polynomial
from libs.motivic.strata import (
    Atom,
    Bundle,
    Difference,
    EquivariantSquare,
    Ident,
    Literal,
    Product,
    SpaceExpr,
    Sum,
    Transform,
    WallTerm,
)
from .syntax import Scenario

_ATOM_NAMES = {
    AtomKind.PROJECTIVE: "proj",
    AtomKind.AFFINE: "aff",
    AtomKind.POINT: "pt",
    AtomKind.GRASSMANNIAN: "gr",
    AtomKind.HILB_P2: "hilb",
    AtomKind.REL_HILBERT: "relhilb",
}

_SUM_PREC, _PRODUCT_PREC, _FACTOR_PREC = 1, 2, 3


def _precedence(e: SpaceExpr) -> int:
    if isinstance(e, (Sum, Difference)):
        return _SUM_PREC
    if isinstance(e, Product):
        return _PRODUCT_PREC
    return _FACTOR_PREC


def print_literal(value: Polynomial) -> str:
    return f'poly"{format_polynomial(value)}"'


def print_expr(e: SpaceExpr, min_prec: int = _SUM_PREC) -> str:
    if _precedence(e) < min_prec:
        return f"({print_expr(e)})"

    if isinstance(e, Sum):
        return f"{print_expr(e.left, _SUM_PREC)} + {print_expr(e.right, _PRODUCT_PREC)}"
    if isinstance(e, Difference):
        return f"{print_expr(e.left, _SUM_PREC)} - {print_expr(e.right, _PRODUCT_PREC)}"
    if isinstance(e, Product):
        return f"{print_expr(e.left, _PRODUCT_PREC)} * {print_expr(e.right, _FACTOR_PREC)}"
    if isinstance(e, Atom):
        args = ", ".join(str(n) for n in e.spec.params)
        return f"{_ATOM_NAMES[e.spec.kind]}({args})"
    if isinstance(e, Literal):
        return print_literal(e.value)
    if isinstance(e, Ident):
        return e.name
    if isinstance(e, Transform):
        return f"{e.kind.value}({print_expr(e.operand)})"
    if isinstance(e, Bundle):
        return f"bundle({print_expr(e.fiber)}, {print_expr(e.base)})"
    if isinstance(e, EquivariantSquare):
        return (
            f"equivsq({print_expr(e.fiber)}, {print_expr(e.base_plus)}, "
            f"{print_expr(e.base_minus)})"
        )
    raise TypeError(f"not a space expression: {e!r}")


def _print_stratum(e: SpaceExpr) -> str:
    # Inside a wall, a top-level '+' separates strata.
    if isinstance(e, Sum):
        return f"({print_expr(e)})"
    if isinstance(e, Difference):
        return f"{_print_stratum(e.left)} - {print_expr(e.right, _PRODUCT_PREC)}"
    return print_expr(e)


def _print_strata(strata: Iterable[SpaceExpr]) -> str:
    return " + ".join(_print_stratum(s) for s in strata)


def print_wall(wall: WallTerm) -> str:
    return (
        f"wall {wall.alpha} {{ plus = {_print_strata(wall.plus)}; "
        f"minus = {_print_strata(wall.minus)} }}"
    )


def print_scenario(scenario: Scenario) -> str:
    """One statement per line: lets, walls, models, then expectations."""
    lines: List[str] = []
    lines += [f"let {b.name} = {print_expr(b.expr)}" for b in scenario.bindings]
    lines += [print_wall(w) for w in scenario.walls]
    for m in scenario.models:
        suffix = " walls" if m.with_walls else ""
        lines.append(f"model {m.name} = {print_expr(m.expr)}{suffix}")
    lines += [f"expect {x.model} == {print_literal(x.value)}" for x in scenario.expectations]
    return "\n".join(lines) + ("\n" if lines else "")
