"""Exact univariate polynomial arithmetic over the integers.

Coefficients are arbitrary-precision Python integers stored densely, low
degree first. Real-root counting runs on Sturm sequences built from integer
pseudo-remainders that are only ever rescaled by positive factors, so sign
patterns are exact; evaluations at rational points use ``Fraction``. No
floating point enters any certification path.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]


class IntPolynomial:
    """Dense integer-coefficient polynomial; ``coefficients[k]`` multiplies t^k.

    Canonical form: no trailing zero coefficients, so equal polynomials carry
    identical tuples. The zero polynomial is the empty tuple and has degree -1.
    """

    __slots__ = ("coefficients",)

    coefficients: tuple[int, ...]

    def __init__(self, coefficients: Iterable[int] = ()) -> None:
        coeffs = list(coefficients)
        for c in coeffs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficients required, got {type(c).__name__}")
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients = tuple(coeffs)

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "IntPolynomial":
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        return cls((0,) * exponent + (coefficient,))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def leading_coefficient(self) -> int:
        return self.coefficients[-1] if self.coefficients else 0

    def coefficient(self, exponent: int) -> int:
        if 0 <= exponent < len(self.coefficients):
            return self.coefficients[exponent]
        return 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPolynomial((other,))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coefficients))

    def __add__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            other = IntPolynomial((other,))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial(tuple(x + y for x, y in zip(a, b)) + a[len(b):])

    __radd__ = __add__

    def __sub__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            other = IntPolynomial((other,))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        return (-self) + other

    def __mul__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(tuple(other * c for c in self.coefficients))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return IntPolynomial()
        a, b = self.coefficients, other.coefficients
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by t**k."""
        if k < 0:
            raise ValueError("shift exponent must be nonnegative")
        if self.is_zero or k == 0:
            return self
        return IntPolynomial((0,) * k + self.coefficients)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(tuple(k * c for k, c in enumerate(self.coefficients))[1:])

    def __call__(self, point: Rational) -> Rational:
        if isinstance(point, float):
            raise TypeError("exact evaluation only; pass int or Fraction")
        acc: Rational = 0
        for c in reversed(self.coefficients):
            acc = acc * point + c
        return acc

    def content(self) -> int:
        """Positive gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.coefficients:
            g = gcd(g, c)
        return g

    def primitive(self) -> "IntPolynomial":
        """Content divided out, leading coefficient normalized positive."""
        if self.is_zero:
            return self
        g = self.content()
        if self.leading_coefficient < 0:
            g = -g
        return IntPolynomial(tuple(c // g for c in self.coefficients))

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coefficients)!r})"


def _strip(coeffs: list[int]) -> list[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _pseudo_remainder(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Remainder of lc(b)**(deg a - deg b + 1) * a modulo b, over the integers.

    The multiplier is fixed even when reduction finishes early, so its sign
    (needed by the Sturm construction) is deterministic.
    """
    db = len(b) - 1
    lead = b[-1]
    r = list(a)
    k = len(a) - len(b) + 1
    while True:
        _strip(r)
        dr = len(r) - 1
        if dr < db or not r:
            break
        r_lead = r[-1]
        r = [lead * c for c in r]
        offset = dr - db
        for i, bc in enumerate(b):
            r[offset + i] -= r_lead * bc
        k -= 1
    if k > 0 and r:
        scale = lead ** k
        r = [scale * c for c in r]
    return r


def _exact_div(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Quotient a / b when b divides a exactly over the integers."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return []
    r = list(a)
    db = len(b) - 1
    lead = b[-1]
    quotient = [0] * (len(a) - len(b) + 1)
    while r and len(r) - 1 >= db:
        qc, remainder = divmod(r[-1], lead)
        if remainder:
            raise ArithmeticError("polynomial division is not exact")
        offset = len(r) - 1 - db
        quotient[offset] = qc
        for i, bc in enumerate(b):
            r[offset + i] -= qc * bc
        _strip(r)
    if r:
        raise ArithmeticError("polynomial division is not exact")
    return quotient


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Greatest common divisor over the integers, normalized to a primitive
    polynomial with positive leading coefficient times the content gcd.

    Uses a primitive pseudo-remainder sequence, which keeps coefficient
    growth in check without any rational arithmetic.
    """
    if a.is_zero and b.is_zero:
        return IntPolynomial()
    if a.is_zero:
        return b.primitive() * b.content()
    if b.is_zero:
        return a.primitive() * a.content()
    content_gcd = gcd(a.content(), b.content())
    x = list(a.primitive().coefficients)
    y = list(b.primitive().coefficients)
    if len(x) < len(y):
        x, y = y, x
    while y:
        r = _strip(_pseudo_remainder(x, y))
        g = 0
        for c in r:
            g = gcd(g, c)
        x, y = y, [c // g for c in r] if g else []
    result = IntPolynomial(x).primitive()
    return result * content_gcd


def square_free_part(p: IntPolynomial) -> IntPolynomial:
    """The polynomial with the same roots as ``p``, each simple.

    Computed as p / gcd(p, p'), then made primitive with positive leading
    coefficient.
    """
    if p.is_zero:
        raise ValueError("the zero polynomial has no square-free part")
    if p.degree == 0:
        return IntPolynomial.one()
    g = poly_gcd(p, p.derivative())
    quotient = IntPolynomial(_exact_div(p.coefficients, g.coefficients))
    return quotient.primitive()


def _sturm_chain(p: IntPolynomial) -> list[IntPolynomial]:
    """Signed remainder chain of a square-free polynomial of degree >= 1.

    Each remainder is divided by its (positive) content; along with the
    sign-corrected pseudo-remainder this only ever rescales by positive
    factors, which leaves sign variation counts intact.
    """
    chain = [p, p.derivative()]
    while chain[-1].degree > 0:
        a, b = chain[-2], chain[-1]
        raw = _strip(_pseudo_remainder(a.coefficients, b.coefficients))
        if not raw:
            raise ValueError("polynomial is not square-free")
        multiplier_negative = (
            b.leading_coefficient < 0 and (a.degree - b.degree + 1) % 2 == 1
        )
        rem = list(raw) if multiplier_negative else [-c for c in raw]
        g = 0
        for c in rem:
            g = gcd(g, c)
        chain.append(IntPolynomial(tuple(c // g for c in rem)))
    return chain


def _sign(x: Rational) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def _variations(signs: Iterable[int]) -> int:
    seq = [s for s in signs if s]
    return sum(1 for x, y in zip(seq, seq[1:]) if x != y)


def _variations_at_infinity(chain: Sequence[IntPolynomial], positive: bool) -> int:
    signs = []
    for q in chain:
        s = _sign(q.leading_coefficient)
        if not positive and q.degree % 2 == 1:
            s = -s
        signs.append(s)
    return _variations(signs)


def _variations_at_point(chain: Sequence[IntPolynomial], point: Rational) -> int:
    return _variations(_sign(q(point)) for q in chain)


def sturm_real_root_count(
    p: IntPolynomial,
    lower: Rational | None = None,
    upper: Rational | None = None,
) -> int:
    """Number of distinct real roots of a square-free ``p`` in (lower, upper].

    ``None`` endpoints mean unbounded on that side; endpoints must be exact
    (int or Fraction). Non-square-free input is rejected.
    """
    if p.is_zero:
        raise ValueError("root counting needs a nonzero polynomial")
    for endpoint in (lower, upper):
        if isinstance(endpoint, float):
            raise TypeError("exact endpoints only; pass int or Fraction")
    if lower is not None and upper is not None and lower > upper:
        raise ValueError("lower endpoint exceeds upper endpoint")
    if p.degree == 0:
        return 0
    if poly_gcd(p, p.derivative()).degree > 0:
        raise ValueError("input is not square-free; take square_free_part first")
    chain = _sturm_chain(p)
    at_lower = (
        _variations_at_infinity(chain, positive=False)
        if lower is None
        else _variations_at_point(chain, lower)
    )
    at_upper = (
        _variations_at_infinity(chain, positive=True)
        if upper is None
        else _variations_at_point(chain, upper)
    )
    return at_lower - at_upper


@dataclass(frozen=True)
class RealRootCertificate:
    """Sturm-count evidence for or against every root being real.

    The verdict compares the number of distinct real roots of the square-free
    part against its degree; those agree exactly when all roots are real.
    """

    real_rooted: bool
    square_free_degree: int
    distinct_real_roots: int
    variations_at_negative_infinity: int
    variations_at_positive_infinity: int

    def __bool__(self) -> bool:
        return self.real_rooted


def is_real_rooted(p: IntPolynomial) -> RealRootCertificate:
    """Certify whether every complex root of ``p`` is real.

    Multiplicities cannot hide roots: the test runs on the square-free part.
    Constant polynomials are trivially real-rooted.
    """
    if p.is_zero:
        raise ValueError("the zero polynomial has no root certificate")
    q = square_free_part(p)
    if q.degree <= 0:
        return RealRootCertificate(True, 0, 0, 0, 0)
    chain = _sturm_chain(q)
    at_neg = _variations_at_infinity(chain, positive=False)
    at_pos = _variations_at_infinity(chain, positive=True)
    count = at_neg - at_pos
    return RealRootCertificate(count == q.degree, q.degree, count, at_neg, at_pos)


def _warn_on_negative(coefficients: Sequence[int], check: str) -> None:
    if any(c < 0 for c in coefficients):
        warnings.warn(
            f"{check}: negative coefficients present, so this check does not "
            "connect to real-rootedness",
            stacklevel=3,
        )


def is_log_concave(p: IntPolynomial) -> bool:
    """Every interior coefficient squared dominates the product of its
    neighbors (exact integer comparisons; internal zeros are not assumed
    away)."""
    coeffs = p.coefficients
    _warn_on_negative(coeffs, "is_log_concave")
    return all(
        coeffs[k] * coeffs[k] >= coeffs[k - 1] * coeffs[k + 1]
        for k in range(1, len(coeffs) - 1)
    )


def is_unimodal(p: IntPolynomial) -> bool:
    """The coefficient sequence rises (weakly) and then falls (weakly)."""
    coeffs = p.coefficients
    _warn_on_negative(coeffs, "is_unimodal")
    descending = False
    for prev, cur in zip(coeffs, coeffs[1:]):
        if cur < prev:
            descending = True
        elif cur > prev and descending:
            return False
    return True


def newton_inequalities_hold(p: IntPolynomial) -> bool:
    """Log-concavity strengthened by the classical binomial correction:

        a_k^2 >= a_{k-1} * a_{k+1} * (k+1)/k * (n-k+1)/(n-k)

    for interior k, with n the degree. Every real-rooted polynomial with
    nonnegative coefficients satisfies this; it implies plain log-concavity.
    Degree below 2 is vacuously true.
    """
    n = p.degree
    if n < 2:
        return True
    a = p.coefficients
    _warn_on_negative(a, "newton_inequalities_hold")
    for k in range(1, n):
        lhs = Fraction(a[k] * a[k])
        rhs = Fraction(a[k - 1] * a[k + 1]) * Fraction(k + 1, k) * Fraction(n - k + 1, n - k)
        if lhs < rhs:
            return False
    return True
