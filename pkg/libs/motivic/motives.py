"""Closed-form virtual Poincare polynomials of the atom spaces.

Every stratum of the wall-crossing computation is assembled from projective
spaces, affine cells, Grassmannians, Hilbert schemes of points on the plane,
their symmetric squares, and relative Hilbert schemes in the bundle regime.
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import List, Tuple

from libs.core.errors import AtomDomainError, NotABundleError, PolynomialError
from .polyring import ONE, ZERO, Polynomial


class AtomKind(str, Enum):
    PROJECTIVE = "projective"
    AFFINE = "affine"
    POINT = "point"
    GRASSMANNIAN = "grassmannian"
    HILB_P2 = "hilb_p2"
    REL_HILBERT = "rel_hilbert"


_ARITY = {
    AtomKind.PROJECTIVE: 1,
    AtomKind.AFFINE: 1,
    AtomKind.POINT: 0,
    AtomKind.GRASSMANNIAN: 2,
    AtomKind.HILB_P2: 1,
    AtomKind.REL_HILBERT: 2,
}


@dataclass(frozen=True)
class AtomSpec:
    """An atom space: its kind plus non-negative integer parameters."""

    kind: AtomKind
    params: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "kind", AtomKind(self.kind))
        object.__setattr__(self, "params", tuple(self.params))
        if len(self.params) != _ARITY[self.kind]:
            raise AtomDomainError(
                f"{self.kind.value} takes {_ARITY[self.kind]} parameter(s), got {len(self.params)}"
            )
        if any(n < 0 for n in self.params):
            raise AtomDomainError(f"{self.kind.value} parameters must be non-negative")


# ----------------------------------------------------------------------
# Cells and projective spaces
# ----------------------------------------------------------------------

def point() -> Polynomial:
    return ONE


def affine(n: int) -> Polynomial:
    if n < 0:
        raise AtomDomainError(f"affine space dimension must be non-negative, got {n}")
    return Polynomial.monomial(n)


def projective(n: int) -> Polynomial:
    """P(P^n) = 1 + p + ... + p^n."""
    if n < 0:
        raise AtomDomainError(f"projective space dimension must be non-negative, got {n}")
    return Polynomial((1,) * (n + 1))


# ----------------------------------------------------------------------
# Grassmannians
# ----------------------------------------------------------------------

@lru_cache(maxsize=None)
def grassmannian(k: int, n: int) -> Polynomial:
    """Gaussian binomial [n choose k]_p, the Schubert-cell count of Gr(k, n)."""
    if n < 0 or k < 0 or k > n:
        raise AtomDomainError(f"Gr({k},{n}) needs 0 <= k <= n")
    k = min(k, n - k)
    # rows[j] holds [m, j]; [m, j] = [m-1, j-1] + p^j [m-1, j], updated in place from the top
    rows = [ONE] + [ZERO] * k
    for m in range(1, n + 1):
        for j in range(min(m, k), 0, -1):
            rows[j] = rows[j - 1] + rows[j].shift(j)
    return rows[k]


# ----------------------------------------------------------------------
# Hilbert schemes of points on the plane
# ----------------------------------------------------------------------

def _divide_by_geometric(series: List[Polynomial], shift: int, step: int) -> List[Polynomial]:
    """Multiply a t-series by 1 / (1 - p^shift t^step), truncated to its length."""
    out = list(series)
    for m in range(step, len(out)):
        out[m] = out[m] + out[m - step].shift(shift)
    return out


@lru_cache(maxsize=None)
def _hilb_series(order: int) -> Tuple[Polynomial, ...]:
    series = [ONE] + [ZERO] * order
    for k in range(1, order + 1):
        for shift in (k - 1, k, k + 1):
            series = _divide_by_geometric(series, shift, k)
    return tuple(series)


def hilb_p2(n: int) -> Polynomial:
    """
    P(Hilb^n(P^2)) from the Goettsche product

        prod_{k>=1} 1 / ((1 - p^{k-1} t^k)(1 - p^k t^k)(1 - p^{k+1} t^k)),

    read off as the coefficient of t^n.
    """
    if n < 0:
        raise AtomDomainError(f"Hilbert scheme length must be non-negative, got {n}")
    return _hilb_series(n)[n]


# ----------------------------------------------------------------------
# Symmetric squares
# ----------------------------------------------------------------------

def _halve(a: Polynomial, what: str) -> Polynomial:
    halves = []
    for c in a.coefficients:
        q, r = divmod(c, 2)
        if r:
            raise PolynomialError(f"{what} has a half-integer coefficient")
        halves.append(q)
    return Polynomial(tuple(halves))


def sym2(a: Polynomial) -> Polynomial:
    """Class of Sym^2 X: (P(p)^2 + P(p^2)) / 2."""
    return _halve(a * a + a.compose_power(2), "sym2")


def wedge2(a: Polynomial) -> Polynomial:
    """Anti-invariant part of X x X: (P(p)^2 - P(p^2)) / 2."""
    return _halve(a * a - a.compose_power(2), "wedge2")


def sym2_off_diag(a: Polynomial) -> Polynomial:
    """Class of (X x X - diagonal) / Z2."""
    return sym2(a) - a


# ----------------------------------------------------------------------
# Relative Hilbert schemes
# ----------------------------------------------------------------------

def rel_hilbert(d: int, n: int) -> Polynomial:
    """
    P(B(d, n)) for n points on the universal degree-d plane curve.

    Only the regime 0 <= n <= d is closed form: there B(d, n) is a
    P^{d(d+3)/2 - n}-bundle over Hilb^n(P^2).
    """
    if d < 1:
        raise AtomDomainError(f"curve degree must be positive, got {d}")
    if n < 0:
        raise AtomDomainError(f"number of points must be non-negative, got {n}")
    if n > d:
        raise NotABundleError(
            f"no closed form for B({d},{n}): relative Hilbert scheme is not a bundle (n > d)"
        )
    return projective(d * (d + 3) // 2 - n) * hilb_p2(n)


# ----------------------------------------------------------------------
# Dispatch
# ----------------------------------------------------------------------

_EVALUATORS = {
    AtomKind.PROJECTIVE: projective,
    AtomKind.AFFINE: affine,
    AtomKind.POINT: point,
    AtomKind.GRASSMANNIAN: grassmannian,
    AtomKind.HILB_P2: hilb_p2,
    AtomKind.REL_HILBERT: rel_hilbert,
}


def evaluate_atom(spec: AtomSpec) -> Polynomial:
    return _EVALUATORS[spec.kind](*spec.params)


def atom_table() -> List[Tuple[str, Polynomial]]:
    """Named atoms used by the (5,2) computation, in presentation order."""
    v = sym2(projective(2))
    rows = [(f"P^{n}", projective(n)) for n in (1, 2, 3, 5, 9, 14)]
    rows += [
        ("Gr(2,3)", grassmannian(2, 3)),
        ("Gr(2,4)", grassmannian(2, 4)),
        ("Gr(2,15)", grassmannian(2, 15)),
    ]
    rows += [(f"Hilb^{n}(P^2)", hilb_p2(n)) for n in range(4)]
    rows += [
        ("V = Sym^2(P^2)", v),
        ("M(2,2)^s = P^5 - V", projective(5) - v),
    ]
    rows += [
        (f"B({d},{n})", rel_hilbert(d, n))
        for d, n in ((3, 0), (3, 1), (4, 0), (4, 1), (4, 2), (4, 3), (5, 3))
    ]
    return rows
