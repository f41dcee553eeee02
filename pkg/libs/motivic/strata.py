"""Expression calculus for stratified spaces.

The motivic rules: a closed decomposition adds, a Zariski locally trivial
fibration multiplies, a bijective morphism preserves the class. Bundles and
products evaluate identically; they are kept apart so scenario files can say
which one they mean. The one non-multiplicative fibration is the Z2 quotient
of a fibre square, handled by ``EquivariantSquare``.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from types import MappingProxyType
from typing import Callable, Dict, Iterable, Mapping, Optional, Tuple, Union

from libs.core.errors import EvaluationError, UnboundIdentifierError
from libs.core.logging import get_logger
from .motives import AtomKind, AtomSpec, evaluate_atom, sym2, sym2_off_diag, wedge2
from .polyring import ZERO, Polynomial

logger = get_logger("strata")


# ----------------------------------------------------------------------
# Expression nodes
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class Atom:
    spec: AtomSpec


@dataclass(frozen=True)
class Literal:
    value: Polynomial


@dataclass(frozen=True)
class Ident:
    name: str


@dataclass(frozen=True)
class Sum:
    left: "SpaceExpr"
    right: "SpaceExpr"


@dataclass(frozen=True)
class Difference:
    left: "SpaceExpr"
    right: "SpaceExpr"


@dataclass(frozen=True)
class Product:
    left: "SpaceExpr"
    right: "SpaceExpr"


@dataclass(frozen=True)
class Bundle:
    fiber: "SpaceExpr"
    base: "SpaceExpr"


class TransformKind(str, Enum):
    SYM2 = "sym2"
    WEDGE2 = "wedge2"
    SYM2_OFF_DIAG = "sym2od"


@dataclass(frozen=True)
class Transform:
    """Symmetric-square operators applied to a sub-expression."""
    kind: TransformKind
    operand: "SpaceExpr"


@dataclass(frozen=True)
class EquivariantSquare:
    """
    Z2 quotient of a fibre-square over a base with a free involution.

    ``base_plus`` is the invariant class (the quotient base) and
    ``base_minus`` the anti-invariant remainder; the total class is
    base_plus * Sym^2(fiber) + base_minus * Wedge^2(fiber).
    """
    fiber: "SpaceExpr"
    base_plus: "SpaceExpr"
    base_minus: "SpaceExpr"


SpaceExpr = Union[
    Atom, Literal, Ident, Sum, Difference, Product, Bundle, Transform, EquivariantSquare
]


# Convenience constructors used by the ledger and tests.

def proj(n: int) -> Atom:
    return Atom(AtomSpec(AtomKind.PROJECTIVE, (n,)))


def aff(n: int) -> Atom:
    return Atom(AtomSpec(AtomKind.AFFINE, (n,)))


def pt() -> Atom:
    return Atom(AtomSpec(AtomKind.POINT, ()))


def gr(k: int, n: int) -> Atom:
    return Atom(AtomSpec(AtomKind.GRASSMANNIAN, (k, n)))


def hilb(n: int) -> Atom:
    return Atom(AtomSpec(AtomKind.HILB_P2, (n,)))


def relhilb(d: int, n: int) -> Atom:
    return Atom(AtomSpec(AtomKind.REL_HILBERT, (d, n)))


def lit(value: Polynomial) -> Literal:
    return Literal(value)


def total(parts: Iterable[SpaceExpr]) -> SpaceExpr:
    """Left-nested Sum of one or more parts."""
    parts = list(parts)
    if not parts:
        return Literal(ZERO)
    acc = parts[0]
    for part in parts[1:]:
        acc = Sum(acc, part)
    return acc


def product(*factors: SpaceExpr) -> SpaceExpr:
    acc = factors[0]
    for f in factors[1:]:
        acc = Product(acc, f)
    return acc


# ----------------------------------------------------------------------
# Environment
# ----------------------------------------------------------------------

class Environment:
    """Immutable identifier -> polynomial map; extending never shadows."""

    def __init__(self, bindings: Optional[Mapping[str, Polynomial]] = None):
        self._bindings = MappingProxyType(dict(bindings or {}))

    def lookup(self, name: str) -> Polynomial:
        try:
            return self._bindings[name]
        except KeyError:
            raise UnboundIdentifierError(name) from None

    def extend(self, name: str, value: Polynomial) -> "Environment":
        if name in self._bindings:
            raise EvaluationError(f"identifier '{name}' is already bound")
        merged = dict(self._bindings)
        merged[name] = value
        return Environment(merged)

    def __contains__(self, name: str) -> bool:
        return name in self._bindings

    def names(self) -> Tuple[str, ...]:
        return tuple(self._bindings)


EMPTY_ENV = Environment()


# ----------------------------------------------------------------------
# Evaluation
# ----------------------------------------------------------------------

class Evaluator:
    """Evaluates expression trees left to right against an environment."""

    def __init__(self, env: Environment = EMPTY_ENV):
        self.env = env
        self.handlers: Dict[type, Callable[..., Polynomial]] = {
            Atom: self._atom,
            Literal: self._literal,
            Ident: self._ident,
            Sum: self._sum,
            Difference: self._difference,
            Product: self._product,
            Bundle: self._bundle,
            Transform: self._transform,
            EquivariantSquare: self._equivariant_square,
        }

    def evaluate(self, expr: SpaceExpr) -> Polynomial:
        handler = self.handlers.get(type(expr))
        if handler is None:
            raise EvaluationError(f"Unsupported expression node: {type(expr).__name__}")
        return handler(expr)

    def _atom(self, e: Atom) -> Polynomial:
        return evaluate_atom(e.spec)

    def _literal(self, e: Literal) -> Polynomial:
        return e.value

    def _ident(self, e: Ident) -> Polynomial:
        return self.env.lookup(e.name)

    def _sum(self, e: Sum) -> Polynomial:
        left = self.evaluate(e.left)
        return left + self.evaluate(e.right)

    def _difference(self, e: Difference) -> Polynomial:
        left = self.evaluate(e.left)
        return left - self.evaluate(e.right)

    def _product(self, e: Product) -> Polynomial:
        left = self.evaluate(e.left)
        return left * self.evaluate(e.right)

    def _bundle(self, e: Bundle) -> Polynomial:
        fiber = self.evaluate(e.fiber)
        return fiber * self.evaluate(e.base)

    def _transform(self, e: Transform) -> Polynomial:
        operand = self.evaluate(e.operand)
        if e.kind is TransformKind.SYM2:
            return sym2(operand)
        if e.kind is TransformKind.WEDGE2:
            return wedge2(operand)
        return sym2_off_diag(operand)

    def _equivariant_square(self, e: EquivariantSquare) -> Polynomial:
        fiber = self.evaluate(e.fiber)
        plus = self.evaluate(e.base_plus)
        minus = self.evaluate(e.base_minus)
        return plus * sym2(fiber) + minus * wedge2(fiber)


def eval_expr(expr: SpaceExpr, env: Environment = EMPTY_ENV) -> Polynomial:
    return Evaluator(env).evaluate(expr)


# ----------------------------------------------------------------------
# Walls
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class WallTerm:
    """
    Change of the moduli space across one wall.

    ``plus`` are the strata C_alpha^+ gained, ``minus`` the strata
    C_alpha^- lost; source positions are ignored by equality.
    """
    alpha: Fraction
    plus: Tuple[SpaceExpr, ...]
    minus: Tuple[SpaceExpr, ...]
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "plus", tuple(self.plus))
        object.__setattr__(self, "minus", tuple(self.minus))
        if self.alpha <= 0:
            raise EvaluationError(f"wall value must be positive, got {self.alpha}")


def wall_delta(wall: WallTerm, env: Environment = EMPTY_ENV) -> Polynomial:
    """P(C_alpha) = sum P(plus strata) - sum P(minus strata)."""
    evaluator = Evaluator(env)
    delta = ZERO
    for stratum in wall.plus:
        delta = delta + evaluator.evaluate(stratum)
    for stratum in wall.minus:
        delta = delta - evaluator.evaluate(stratum)
    logger.debug(
        f"wall delta euler={delta.eval_at(1)}", extra={"alpha": wall.alpha}
    )
    return delta


def assemble(
    base: Polynomial,
    walls: Iterable[WallTerm],
    env: Environment = EMPTY_ENV
) -> Polynomial:
    """Base model plus the delta of every wall crossed."""
    result = base
    for wall in walls:
        result = result + wall_delta(wall, env)
    return result
