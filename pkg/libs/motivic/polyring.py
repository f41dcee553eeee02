"""Exact dense univariate polynomials over the integers.

The grading variable ``p`` stands for the class of the affine line: one power
of ``p`` per even cohomological degree. With this convention P(P^n) is
1 + p + ... + p^n and the virtual Euler number is the value at p = 1.
"""

import re
from dataclasses import dataclass
from typing import Iterable, Tuple, Union

from libs.core.errors import MalformedLiteralError, NotDivisibleError, PolynomialError

# Degree reported for the zero polynomial.
MINUS_INFINITY = float("-inf")

Scalar = int

# Literal bounds; every polynomial of the computation stays far below them.
MAX_LITERAL_EXPONENT = 10_000
MAX_COEFFICIENT_DIGITS = 1_000


def _canonical(coefficients: Iterable[int]) -> Tuple[int, ...]:
    coeffs = list(coefficients)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class Polynomial:
    """Immutable polynomial; ``coefficients[i]`` is the coefficient of p^i."""

    coefficients: Tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = _canonical(self.coefficients)
        for c in coeffs:
            if isinstance(c, bool) or not isinstance(c, int):
                raise PolynomialError(f"Coefficients must be integers, got {c!r}")
        object.__setattr__(self, "coefficients", coeffs)

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def of(cls, *coefficients: int) -> "Polynomial":
        """Build from ascending coefficients: ``Polynomial.of(1, 2)`` is 1 + 2p."""
        return cls(tuple(coefficients))

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "Polynomial":
        if k < 0:
            raise PolynomialError("Monomial exponent must be non-negative")
        return cls((0,) * k + (c,))

    # ------------------------------------------------------------------
    # Inspection
    # ------------------------------------------------------------------

    @property
    def degree(self) -> Union[int, float]:
        if not self.coefficients:
            return MINUS_INFINITY
        return len(self.coefficients) - 1

    @property
    def leading_coefficient(self) -> int:
        return self.coefficients[-1] if self.coefficients else 0

    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, i: int) -> int:
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return 0

    def __len__(self) -> int:
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    # ------------------------------------------------------------------
    # Ring operations
    # ------------------------------------------------------------------

    @staticmethod
    def _lift(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return Polynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(tuple(out))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def scale(self, k: int) -> "Polynomial":
        return Polynomial(tuple(k * c for c in self.coefficients))

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise PolynomialError("Negative powers are not polynomials")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "Polynomial":
        """Multiply by p^k."""
        if k < 0:
            raise PolynomialError("Shift must be non-negative")
        if not self.coefficients:
            return ZERO
        return Polynomial((0,) * k + self.coefficients)

    # ------------------------------------------------------------------
    # Derived operations
    # ------------------------------------------------------------------

    def compose_power(self, k: int) -> "Polynomial":
        """Substitute p -> p^k."""
        if k < 1:
            raise PolynomialError(f"compose_power needs k >= 1, got {k}")
        if not self.coefficients:
            return ZERO
        out = [0] * ((len(self.coefficients) - 1) * k + 1)
        for i, c in enumerate(self.coefficients):
            out[i * k] = c
        return Polynomial(tuple(out))

    def div_exact(self, divisor: "Polynomial") -> "Polynomial":
        """Return q with self = q * divisor, or raise NotDivisibleError."""
        if divisor.is_zero():
            raise PolynomialError("Division by the zero polynomial")

        remainder = list(self.coefficients)
        lead = divisor.leading_coefficient
        dlen = len(divisor.coefficients)
        quotient = [0] * max(len(remainder) - dlen + 1, 0)

        for shift in range(len(remainder) - dlen, -1, -1):
            top = remainder[shift + dlen - 1]
            if top == 0:
                continue
            q, r = divmod(top, lead)
            if r:
                raise NotDivisibleError(
                    f"Quotient coefficient of p^{shift} is not an integer",
                    remainder=Polynomial(tuple(remainder)),
                )
            quotient[shift] = q
            for j, c in enumerate(divisor.coefficients):
                remainder[shift + j] -= q * c

        rest = Polynomial(tuple(remainder))
        if not rest.is_zero():
            raise NotDivisibleError(
                f"Nonzero remainder {format_polynomial(rest)}", remainder=rest
            )
        return Polynomial(tuple(quotient))

    def eval_at(self, x: int) -> int:
        """Exact value at an integer point (Horner)."""
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def is_palindromic(self) -> bool:
        return self.coefficients == self.coefficients[::-1]

    def __str__(self) -> str:
        return format_polynomial(self)


ZERO = Polynomial()
ONE = Polynomial((1,))
P = Polynomial((0, 1))


# ----------------------------------------------------------------------
# Functional spellings
# ----------------------------------------------------------------------

def compose_power(a: Polynomial, k: int) -> Polynomial:
    return a.compose_power(k)


def div_exact(a: Polynomial, b: Polynomial) -> Polynomial:
    return a.div_exact(b)


def eval_at(a: Polynomial, x: int) -> int:
    return a.eval_at(x)


def is_palindromic(a: Polynomial) -> bool:
    return a.is_palindromic()


# ----------------------------------------------------------------------
# Literal format
# ----------------------------------------------------------------------

_TERM = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?P<coeff>\d+)?\s*\*?\s*"
    r"(?:(?P<var>[pq])(?:\s*\^\s*(?:\{\s*(?P<bexp>\d+)\s*\}|(?P<exp>\d+)))?)?\s*"
)


def parse_polynomial(text: str) -> Polynomial:
    """
    Parse a literal such as ``1 + 3p + 9p^2``.

    Coefficient 1 may be elided, zero terms may be omitted, ``*`` between
    coefficient and variable is optional, and ``q`` is read as ``p``.
    Exponents may be braced (``p^{10}``).
    """
    if not text.strip():
        raise MalformedLiteralError("Empty polynomial literal", 0)

    coeffs: dict = {}
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if m is None or m.end() == pos:
            raise MalformedLiteralError(f"Unexpected character {text[pos]!r}", pos)
        sign, digits, var = m.group("sign"), m.group("coeff"), m.group("var")
        if digits is None and var is None:
            if m.end() == len(text) and not sign and not first:
                break
            raise MalformedLiteralError("Expected a term", m.start())
        if sign is None and not first:
            raise MalformedLiteralError("Missing '+' or '-' between terms", m.start())

        if digits is not None and len(digits) > MAX_COEFFICIENT_DIGITS:
            raise MalformedLiteralError(
                f"Coefficient longer than {MAX_COEFFICIENT_DIGITS} digits", m.start("coeff")
            )
        c = int(digits) if digits is not None else 1
        if sign == "-":
            c = -c
        exp_group = "exp" if m.group("exp") is not None else "bexp"
        exp_text = m.group(exp_group)
        if var is None:
            e = 0
        elif exp_text is None:
            e = 1
        else:
            exp_text = exp_text.lstrip("0") or "0"
            if len(exp_text) > len(str(MAX_LITERAL_EXPONENT)) or int(exp_text) > MAX_LITERAL_EXPONENT:
                raise MalformedLiteralError(
                    f"Exponent exceeds {MAX_LITERAL_EXPONENT}", m.start(exp_group)
                )
            e = int(exp_text)
        coeffs[e] = coeffs.get(e, 0) + c
        pos = m.end()
        first = False

    if not coeffs:
        return ZERO
    top = max(coeffs)
    return Polynomial(tuple(coeffs.get(i, 0) for i in range(top + 1)))


def _monomial_text(i: int) -> str:
    if i == 0:
        return ""
    if i == 1:
        return "p"
    return f"p^{i}"


def format_polynomial(a: Polynomial) -> str:
    """Canonical ascending text, e.g. ``1 + 3p + 9p^2``; zero prints as ``0``."""
    parts = []
    for i, c in enumerate(a.coefficients):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            body = ("" if mag == 1 else str(mag)) + _monomial_text(i)
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts) if parts else "0"
