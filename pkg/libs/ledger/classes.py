"""Pair classes, wall location and Euler-pairing bookkeeping."""

from collections import OrderedDict
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence

from libs.core.errors import ValidationError
from libs.core.logging import get_logger

logger = get_logger("ledger.classes")


@dataclass(frozen=True)
class PairClass:
    """Class (d, chi) of a one-dimensional sheaf with Hilbert polynomial dm + chi."""

    d: int
    chi: int

    def __post_init__(self):
        if self.d < 1:
            raise ValidationError(f"degree must be positive, got {self.d}", field="d")

    @property
    def point_count(self) -> int:
        """n with M^infinity(d, chi) = B(d, n)."""
        return self.chi - self.d * (3 - self.d) // 2

    def __str__(self) -> str:
        return f"({self.d},{self.chi})"


@dataclass(frozen=True)
class WallCandidate:
    """
    A destabilizing sub-pair at a wall.

    The sub-pair ``(sub_section, sub)`` carries no section; the quotient
    pair carries the section of the parent.
    """

    alpha: Fraction
    sub: PairClass
    quotient: PairClass
    sub_section: int = 0

    def __post_init__(self):
        if self.alpha <= 0:
            raise ValidationError(f"wall value must be positive, got {self.alpha}", field="alpha")
        if self.sub_section not in (0, 1):
            raise ValidationError("sub_section must be 0 or 1", field="sub_section")

    @property
    def parent(self) -> PairClass:
        return PairClass(self.sub.d + self.quotient.d, self.sub.chi + self.quotient.chi)


def wall_enumerate(c: PairClass) -> List[WallCandidate]:
    """
    Walls of M^alpha(d, chi), largest alpha first.

    A sub-sheaf (d', chi') without section destabilizes at
    alpha = (d chi' - d' chi) / d'; the candidate is kept when the quotient
    class still has a non-empty relative Hilbert scheme.
    """
    if c.d < 2:
        raise ValidationError(f"walls need degree at least 2, got {c.d}", field="d")

    candidates = []
    for d_sub in range(1, c.d):
        q = c.d - d_sub
        chi_low = (d_sub * c.chi) // c.d + 1
        chi_high = c.chi - q * (3 - q) // 2
        for chi_sub in range(chi_low, chi_high + 1):
            alpha = Fraction(c.d * chi_sub - d_sub * c.chi, d_sub)
            if alpha <= 0:
                continue
            quotient = PairClass(q, c.chi - chi_sub)
            if quotient.point_count < 0:
                continue
            candidates.append(WallCandidate(alpha, PairClass(d_sub, chi_sub), quotient))

    candidates.sort(key=lambda w: (-w.alpha, w.sub.d))
    logger.debug(f"{c}: {len(candidates)} wall candidates")
    return candidates


def group_by_alpha(candidates: Sequence[WallCandidate]) -> Dict[Fraction, List[WallCandidate]]:
    """Candidates grouped by wall value, descending."""
    grouped: Dict[Fraction, List[WallCandidate]] = OrderedDict()
    for w in sorted(candidates, key=lambda w: (-w.alpha, w.sub.d)):
        grouped.setdefault(w.alpha, []).append(w)
    return grouped


# ----------------------------------------------------------------------
# Euler pairings
# ----------------------------------------------------------------------

def chi_sheaves(d: int, d2: int) -> int:
    """chi(F, F') for one-dimensional sheaves of degrees d and d2 on the plane."""
    if d < 1 or d2 < 1:
        raise ValidationError(f"degrees must be positive, got ({d}, {d2})")
    return -d * d2


def chi_pair_self(c: PairClass) -> int:
    return -c.d * c.d - c.chi + 1


def expected_dim(c: PairClass) -> int:
    return 1 - chi_pair_self(c)


def ext_dim_from_chi(h0: int, d: int, d2: int) -> int:
    """dim Ext^1((1, F), (0, F')) = h^0(F') - chi(F, F')."""
    if h0 < 0:
        raise ValidationError(f"h0 must be non-negative, got {h0}", field="h0")
    return h0 - chi_sheaves(d, d2)


@dataclass(frozen=True)
class ChiRecord:
    """Section counts entering the Ext^1 dimensions of one wall type."""

    d_quot: int
    d_sub: int
    h0: int
    h1: int = 0

    def __post_init__(self):
        if self.h0 < 0 or self.h1 < 0:
            raise ValidationError("section counts must be non-negative")
        if self.h1 > self.d_quot * self.d_sub:
            raise ValidationError("h1 exceeds d_quot * d_sub", field="h1")

    @property
    def forward(self) -> int:
        """Extensions of the quotient pair by the sub-sheaf (the plus side)."""
        return ext_dim_from_chi(self.h0, self.d_quot, self.d_sub)

    @property
    def reverse(self) -> int:
        """Extensions in the opposite direction (the minus side)."""
        return self.d_quot * self.d_sub - self.h1


@dataclass(frozen=True)
class ExtensionRecord:
    label: str
    wall: WallCandidate
    record: ChiRecord


# (parent, alpha, sub, h1); h0 = max(chi_sub, 0)
_LEDGER = (
    ((5, 2), Fraction(18), (1, 4), 0),
    ((5, 2), Fraction(13), (1, 3), 1),
    ((5, 2), Fraction(8), (1, 2), 1),
    ((5, 2), Fraction(3), (1, 1), 0),
    ((5, 2), Fraction(3), (2, 2), 0),
    ((5, 2), Fraction(1, 2), (2, 1), 0),
    ((5, -2), Fraction(2), (1, 0), 0),
)


def extension_ledger() -> List[ExtensionRecord]:
    """Forward and reverse Ext^1 dimensions of every wall type of (5,2) and (5,-2)."""
    rows = []
    for (d, chi), alpha, (d_sub, chi_sub), h1 in _LEDGER:
        sub = PairClass(d_sub, chi_sub)
        quotient = PairClass(d - d_sub, chi - chi_sub)
        wall = WallCandidate(alpha, sub, quotient)
        record = ChiRecord(quotient.d, sub.d, max(chi_sub, 0), h1)
        rows.append(ExtensionRecord(f"{sub} -> {quotient}", wall, record))
    return rows
