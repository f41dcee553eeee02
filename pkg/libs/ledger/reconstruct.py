"""Stratum-level reconstruction of the alpha = 3 wall of M^alpha(5,2).

The published change P(C_3^+) - P(C_3^-) splits into three brackets: the
(4,1)+(1,1) strata away from the overlap (A), the overlap of both types (D),
and the (3,0)+(2,2) strata (B). A and D are computable; B involves
M^+(3,0), which is never given, so it is recovered from the published total
and tested for exact division by its known factors.
"""

from dataclasses import dataclass
from typing import Dict, Optional

from libs.core.errors import NotDivisibleError
from libs.core.logging import get_logger
from libs.motivic.motives import projective, sym2
from libs.motivic.polyring import Polynomial
from libs.motivic.strata import (
    Bundle,
    Difference,
    EquivariantSquare,
    Product,
    SpaceExpr,
    Sum,
    Transform,
    TransformKind,
    eval_expr,
    gr,
    lit,
    proj,
    relhilb,
)
from .golden import C3_WALL
from .pipeline import mplus41

logger = get_logger("ledger.reconstruct")

EQUIVARIANT = "equivariant"
NAIVE = "naive"


def _off_diagonal() -> SpaceExpr:
    """P^2 x P^2 minus its diagonal."""
    return Difference(Product(proj(2), proj(2)), proj(2))


def _a_side(plus: bool) -> SpaceExpr:
    off = _off_diagonal()
    if plus:
        outer, inner, rest = 4, 3, relhilb(4, 3)
    else:
        outer, inner, rest = 3, 2, lit(mplus41())
    stratum = Bundle(proj(outer), Product(proj(2), rest))
    overlap = Sum(
        Bundle(proj(inner), Bundle(proj(inner), Product(off, proj(9)))),
        Bundle(proj(inner - 1), Bundle(proj(inner), Product(proj(2), proj(9)))),
    )
    return Difference(stratum, overlap)


def a_bracket_expr() -> SpaceExpr:
    """[P(A^+ - A^+ D^+) - P(A^- - A^- D^-)]."""
    return Difference(_a_side(True), _a_side(False))


def _d_side(plus: bool, variant: str) -> SpaceExpr:
    fiber, grass = (3, gr(2, 4)) if plus else (2, gr(2, 3))
    sod = Transform(TransformKind.SYM2_OFF_DIAG, proj(2))
    if variant == EQUIVARIANT:
        square = EquivariantSquare(proj(fiber), sod, Difference(_off_diagonal(), sod))
    else:
        square = Bundle(Product(proj(fiber), proj(fiber)), sod)
    return Sum(Product(square, proj(9)), Bundle(grass, Product(proj(9), proj(2))))


def d_bracket_expr(variant: str = EQUIVARIANT) -> SpaceExpr:
    """[P(D^+) - P(D^-)], the overlap of both destabilizing types."""
    if variant not in (EQUIVARIANT, NAIVE):
        raise ValueError(f"Unknown D-bracket variant: {variant}")
    return Difference(_d_side(True, variant), _d_side(False, variant))


def b_bracket_divisor() -> Polynomial:
    """P(P^7 - P^5) * P(M(2,2)^s), the known factors of the B bracket."""
    return (projective(7) - projective(5)) * (projective(5) - sym2(projective(2)))


@dataclass(frozen=True)
class VariantResult:
    d_bracket: Polynomial
    b_implied: Polynomial
    recovered: Optional[Polynomial] = None
    failure: Optional[str] = None

    @property
    def recovered_nonnegative(self) -> bool:
        return self.recovered is not None and all(c >= 0 for c in self.recovered)


@dataclass(frozen=True)
class C3Reconstruction:
    target: Polynomial
    a_bracket: Polynomial
    variants: Dict[str, VariantResult]

    def total(self, variant: str = EQUIVARIANT) -> Polynomial:
        v = self.variants[variant]
        return self.a_bracket + v.d_bracket + v.b_implied


def reconstruct_c3(target: Polynomial = C3_WALL) -> C3Reconstruction:
    """Split the alpha = 3 wall into brackets; the B bracket is implied by ``target``."""
    a = eval_expr(a_bracket_expr())
    divisor = b_bracket_divisor()

    variants = {}
    for variant in (EQUIVARIANT, NAIVE):
        d = eval_expr(d_bracket_expr(variant))
        b = target - a - d
        try:
            recovered, failure = b.div_exact(divisor), None
        except NotDivisibleError as e:
            recovered, failure = None, f"{e}"
        logger.info(
            f"{variant}: d euler={d.eval_at(1)}, b euler={b.eval_at(1)}, "
            f"divisible={recovered is not None}",
            extra={"alpha": 3},
        )
        variants[variant] = VariantResult(d, b, recovered, failure)

    return C3Reconstruction(target, a, variants)
