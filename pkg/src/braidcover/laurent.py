"""Univariate Laurent polynomials with integer coefficients.

A :class:`LaurentPoly` is stored densely as a lowest exponent plus a tuple of
coefficients with no zero at either end; the zero polynomial has no
coefficients. Coefficients are Python ints, so nothing ever overflows.

Alexander polynomials are only defined up to multiplication by ``±t^d``.
Every "equal up to units" comparison in the package goes through
:func:`normalize_unit`.
"""
from __future__ import annotations

from typing import Iterable, Mapping

from braidcover import _backend
from braidcover.errors import NonExactDivisionError, NonReciprocalError, ZeroPolynomialError

__all__ = [
    "LaurentPoly",
    "divide_exact",
    "evaluate_at_one",
    "is_palindromic",
    "normalize_unit",
    "symmetrize",
]


class LaurentPoly:
    __slots__ = ("_low", "_coeffs", "variable")

    def __init__(self, terms: Mapping[int, int] | None = None, variable: str = "t"):
        if terms:
            items = {e: c for e, c in terms.items() if c}
        else:
            items = {}
        if items:
            low = min(items)
            high = max(items)
            coeffs = [0] * (high - low + 1)
            for e, c in items.items():
                coeffs[e - low] = c
            self._low = low
            self._coeffs = tuple(coeffs)
        else:
            self._low = 0
            self._coeffs = ()
        self.variable = variable

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], low: int = 0, variable: str = "t") -> LaurentPoly:
        """Build from ascending coefficients starting at exponent ``low``."""
        coeffs = list(coeffs)
        start = 0
        while start < len(coeffs) and coeffs[start] == 0:
            start += 1
        end = len(coeffs)
        while end > start and coeffs[end - 1] == 0:
            end -= 1
        p = cls.__new__(cls)
        if start == end:
            p._low, p._coeffs = 0, ()
        else:
            p._low, p._coeffs = low + start, tuple(coeffs[start:end])
        p.variable = variable
        return p

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1, variable: str = "t") -> LaurentPoly:
        return cls.from_coeffs([coeff], exp, variable)

    @classmethod
    def constant(cls, c: int, variable: str = "t") -> LaurentPoly:
        return cls.from_coeffs([c], 0, variable)

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return {self._low + i: c for i, c in enumerate(self._coeffs) if c}

    @property
    def coeffs(self) -> tuple[int, ...]:
        """Ascending dense coefficients from :attr:`low_degree` upward."""
        return self._coeffs

    @property
    def low_degree(self) -> int:
        if not self._coeffs:
            raise ZeroPolynomialError("zero polynomial has no degree")
        return self._low

    @property
    def high_degree(self) -> int:
        if not self._coeffs:
            raise ZeroPolynomialError("zero polynomial has no degree")
        return self._low + len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, exp: int) -> int:
        i = exp - self._low
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return 0

    def with_variable(self, variable: str) -> LaurentPoly:
        return LaurentPoly.from_coeffs(self._coeffs, self._low, variable)

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other) -> LaurentPoly | None:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.variable)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other._coeffs:
            return self
        if not self._coeffs:
            return other if other.variable == self.variable else other.with_variable(self.variable)
        low = min(self._low, other._low)
        high = max(self._low + len(self._coeffs), other._low + len(other._coeffs))
        out = [0] * (high - low)
        off = self._low - low
        for i, c in enumerate(self._coeffs):
            out[off + i] = c
        off = other._low - low
        for i, c in enumerate(other._coeffs):
            out[off + i] += c
        return LaurentPoly.from_coeffs(out, low, self.variable)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly.from_coeffs([-c for c in self._coeffs], self._low, self.variable)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scalar_mul(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self._coeffs or not other._coeffs:
            return LaurentPoly(variable=self.variable)
        if len(other._coeffs) == 1:
            c = other._coeffs[0]
            return LaurentPoly.from_coeffs([x * c for x in self._coeffs], self._low + other._low, self.variable)
        if len(self._coeffs) == 1:
            c = self._coeffs[0]
            return LaurentPoly.from_coeffs([x * c for x in other._coeffs], self._low + other._low, self.variable)
        out = _backend.poly_mul(self._coeffs, other._coeffs)
        return LaurentPoly.from_coeffs(out, self._low + other._low, self.variable)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scalar_mul(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            if len(self._coeffs) == 1 and self._coeffs[0] in (1, -1):
                return LaurentPoly.monomial(-self._low * (-k), self._coeffs[0] ** (-k), self.variable)
            raise ValueError("only units have negative powers")
        result = LaurentPoly.constant(1, self.variable)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scalar_mul(self, c: int) -> LaurentPoly:
        return LaurentPoly.from_coeffs([x * c for x in self._coeffs], self._low, self.variable)

    def shift(self, d: int) -> LaurentPoly:
        """Multiply by ``t^d``."""
        if not self._coeffs:
            return self
        return LaurentPoly.from_coeffs(self._coeffs, self._low + d, self.variable)

    def reciprocal(self) -> LaurentPoly:
        """The substitution ``t -> 1/t``."""
        if not self._coeffs:
            return self
        return LaurentPoly.from_coeffs(reversed(self._coeffs), -self.high_degree, self.variable)

    def evaluate(self, x):
        """Evaluate at ``x``; ``x`` must be nonzero when negative powers occur."""
        if not self._coeffs:
            return 0
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        if self._low >= 0:
            return acc * x**self._low
        from fractions import Fraction

        value = Fraction(acc) / Fraction(x) ** (-self._low)
        return value.numerator if value.denominator == 1 else value

    # -- comparison / hashing -----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._low == other._low and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self._low, self._coeffs))

    def __bool__(self):
        return bool(self._coeffs)

    # -- display / serialization --------------------------------------------

    def __repr__(self):
        return f"LaurentPoly({self.terms!r}, variable={self.variable!r})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        v = self.variable
        parts = []
        for i in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[i]
            if not c:
                continue
            e = self._low + i
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                mono = v if e == 1 else f"{v}^{e}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def to_json(self) -> dict:
        return {
            "variable": self.variable,
            "terms": [{"exp": e, "coeff": str(c)} for e, c in sorted(self.terms.items())],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> LaurentPoly:
        return cls({int(t["exp"]): int(t["coeff"]) for t in data["terms"]}, data.get("variable", "t"))


def divide_exact(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Return ``q`` with ``q * den == num``.

    Raises :class:`NonExactDivisionError` when no such Laurent polynomial
    exists.
    """
    if den.is_zero():
        raise ZeroPolynomialError("division by the zero polynomial")
    if num.is_zero():
        return LaurentPoly(variable=num.variable)
    a = list(num.coeffs)
    b = den.coeffs
    db = len(b) - 1
    if len(a) - 1 < db:
        raise NonExactDivisionError(f"({num}) is not divisible by ({den})")
    lead = b[-1]
    quot = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if not c:
            continue
        q, r = divmod(c, lead)
        if r:
            raise NonExactDivisionError(f"({num}) is not divisible by ({den})")
        quot[i - db] = q
        for j in range(db + 1):
            a[i - db + j] -= q * b[j]
    if any(a[:db]):
        raise NonExactDivisionError(f"({num}) is not divisible by ({den})")
    return LaurentPoly.from_coeffs(quot, num.low_degree - den.low_degree, num.variable)


def evaluate_at_one(p: LaurentPoly) -> int:
    return sum(p.coeffs)


def normalize_unit(p: LaurentPoly) -> LaurentPoly:
    """Canonical representative of ``p`` modulo ``±t^d``.

    Lowest exponent 0 and a positive lowest coefficient.
    """
    if p.is_zero():
        raise ZeroPolynomialError("the zero polynomial has no unit normalization")
    coeffs = p.coeffs
    if coeffs[0] < 0:
        coeffs = [-c for c in coeffs]
    return LaurentPoly.from_coeffs(coeffs, 0, p.variable)


def is_palindromic(p: LaurentPoly) -> int | None:
    """+1 if the coefficient list equals its reversal, -1 if it equals its
    negated reversal, otherwise None.

    The list runs from ``t^min(0, low)`` to the top degree, so an ordinary
    polynomial is judged as written (``t^2 + t`` reads ``(0, 1, 1)`` and is
    not palindromic) while negative exponents are shifted away.
    """
    if p.is_zero():
        raise ZeroPolynomialError("palindromy is undefined for the zero polynomial")
    c = (0,) * max(p.low_degree, 0) + p.coeffs
    r = c[::-1]
    if c == r:
        return 1
    if all(x == -y for x, y in zip(c, r)):
        return -1
    return None


def symmetrize(p: LaurentPoly) -> LaurentPoly:
    """Center a reciprocal polynomial so that ``q(t) == q(1/t)``."""
    q = normalize_unit(p)
    span = q.high_degree
    if span % 2 or is_palindromic(q) != 1:
        raise NonReciprocalError(f"{p} is not a palindromic polynomial of even span")
    return q.shift(-(span // 2))
