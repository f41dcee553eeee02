"""Derived model polynomials: Brill-Noether pipeline, forgetful map, M^infinity."""

from libs.core.errors import ValidationError
from libs.core.logging import get_logger
from libs.motivic.motives import hilb_p2, projective, rel_hilbert
from libs.motivic.polyring import Polynomial
from .classes import PairClass

logger = get_logger("ledger.pipeline")


def m3_pipeline() -> Polynomial:
    """
    P(M(5,2)_3) through the (5,-2) pair space.

    M^infinity(5,-2) is a P^17-bundle over Hilb^3(P^2); its single wall at
    alpha = 2 swaps a P^3 for a P^3 and contributes nothing.
    """
    wall = (projective(3) - projective(3)) * projective(2) * projective(14)
    return projective(17) * hilb_p2(3) + wall


def forgetful(pm: Polynomial, pm3: Polynomial) -> Polynomial:
    """P(M^+(5,2)): P^1 fibres over M(5,2) off the three-section locus, P^2 fibres on it."""
    return (pm - pm3) * projective(1) + pm3 * projective(2)


def mplus41() -> Polynomial:
    """P(M^+(4,1)): B(4,3) with its own alpha = 3 wall crossed."""
    return rel_hilbert(4, 3) + (projective(2) - projective(3)) * projective(2) * projective(9)


def infinity_model(c: PairClass) -> Polynomial:
    """P(M^infinity(d, chi)) = P(B(d, n)) where that is a projective bundle."""
    n = c.point_count
    if n < 0:
        raise ValidationError(f"M^infinity{c} is empty (n = {n})", field="chi")
    logger.debug(f"M^infinity{c} = B({c.d},{n})")
    return rel_hilbert(c.d, n)
