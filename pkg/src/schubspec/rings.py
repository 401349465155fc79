"""Exact arithmetic: integer polynomials in q, cyclotomic integers, and the
small number-theoretic helpers the engines share.

Python ints are the arbitrary-precision integer type throughout.
"""

from __future__ import annotations

import cmath
import math
from functools import lru_cache
from typing import Sequence

from .errors import (
    InexactDivisionError,
    NotCoprimeError,
    NotPerfectSquareError,
    NotRationalIntegerError,
)


def catalan(k: int) -> int:
    """The k-th Catalan number (2k)! / (k! (k+1)!)."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return math.comb(2 * k, k) // (k + 1)


def exact_sqrt(n: int) -> int:
    """Integer square root of a perfect square; NotPerfectSquareError otherwise."""
    if n < 0:
        raise NotPerfectSquareError(f"{n} is negative")
    root = math.isqrt(n)
    if root * root != n:
        raise NotPerfectSquareError(f"{n} is not a perfect square")
    return root


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class IntPolynomial:
    """Dense univariate polynomial over Z in the formal variable q.

    Coefficients are stored lowest degree first with no trailing zeros, so
    equality is coefficient comparison.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int] = ()):
        object.__setattr__(self, "coeffs", _trim(list(coeffs)))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "IntPolynomial":
        return cls([0] * exponent + [coeff])

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPolynomial(out)

    __rmul__ = __mul__

    def shift(self, e: int) -> "IntPolynomial":
        """Multiply by q^e."""
        if not self.coeffs:
            return self
        return IntPolynomial([0] * e + list(self.coeffs))

    def exact_div(self, den: "IntPolynomial") -> "IntPolynomial":
        """Exact quotient self / den; InexactDivisionError if den does not divide."""
        if den.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = den.coeffs
        lead = d[-1]
        out = [0] * max(len(rem) - len(d) + 1, 0)
        for top in range(len(rem) - 1, len(d) - 2, -1):
            c = rem[top]
            if c == 0:
                continue
            if c % lead:
                raise InexactDivisionError("leading coefficient does not divide")
            factor = c // lead
            shift = top - (len(d) - 1)
            out[shift] = factor
            for i, dc in enumerate(d):
                rem[shift + i] -= factor * dc
        if any(rem):
            raise InexactDivisionError("nonzero remainder in exact division")
        return IntPolynomial(out)

    def __call__(self, q: int) -> int:
        """Evaluate at an integer point (Horner)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in enumerate(self.coeffs):
            if not c:
                continue
            if e == 0:
                parts.append(str(c))
            else:
                head = "" if c == 1 else "-" if c == -1 else f"{c}*"
                parts.append(f"{head}q^{e}" if e > 1 else f"{head}q")
        return " + ".join(parts).replace("+ -", "- ")

    def serialize(self) -> list[str]:
        """Coefficients as decimal strings, lowest degree first."""
        return [str(c) for c in self.coeffs]


ONE = IntPolynomial((1,))


def geometric_factor(e: int) -> IntPolynomial:
    """1 - q^e."""
    return IntPolynomial((1,)) - IntPolynomial.monomial(e)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(k: int) -> IntPolynomial:
    """The k-th cyclotomic polynomial, computed as (q^k - 1) divided by the
    product of the proper cyclotomic factors."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    num = IntPolynomial.monomial(k) - ONE
    for d in range(1, k):
        if k % d == 0:
            num = num.exact_div(cyclotomic_polynomial(d))
    return num


@lru_cache(maxsize=None)
def euler_phi(k: int) -> int:
    return cyclotomic_polynomial(k).degree


def _reduce_mod_cyclotomic(coeffs: list[int], k: int) -> tuple[int, ...]:
    phi = cyclotomic_polynomial(k).coeffs
    deg = len(phi) - 1
    for top in range(len(coeffs) - 1, deg - 1, -1):
        c = coeffs[top]
        if c:
            shift = top - deg
            for i, pc in enumerate(phi):
                coeffs[shift + i] -= c * pc
    out = coeffs[:deg]
    out.extend([0] * (deg - len(out)))
    return tuple(out)


class CyclotomicInteger:
    """An element of Z[zeta_k], stored reduced modulo the k-th cyclotomic
    polynomial so that equality is coefficient comparison.

    Supports +, -, * (with int interop), exact division via //, conjugation,
    and an exact rational-integer extraction.
    """

    __slots__ = ("k", "coeffs")

    def __init__(self, k: int, coeffs: Sequence[int]):
        coeffs = list(coeffs)
        if len(coeffs) > euler_phi(k):
            coeffs = list(_reduce_mod_cyclotomic(coeffs, k))
        coeffs.extend([0] * (euler_phi(k) - len(coeffs)))
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicInteger is immutable")

    @classmethod
    def from_int(cls, k: int, value: int) -> "CyclotomicInteger":
        return cls(k, (value,))

    @classmethod
    def root_power(cls, k: int, e: int) -> "CyclotomicInteger":
        """zeta_k^e."""
        coeffs = [0] * (e % k) + [1]
        return cls(k, coeffs)

    def _coerce(self, other) -> "CyclotomicInteger | None":
        if isinstance(other, int):
            return CyclotomicInteger.from_int(self.k, other)
        if isinstance(other, CyclotomicInteger):
            if other.k != self.k:
                raise ValueError(f"mixed cyclotomic orders {self.k} and {other.k}")
            return other
        return None

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        return other is not None and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.k, self.coeffs))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CyclotomicInteger(
            self.k, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInteger(self.k, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return CyclotomicInteger(self.k, out)

    __rmul__ = __mul__

    def galois(self, a: int) -> "CyclotomicInteger":
        """Image under zeta -> zeta^a for gcd(a, k) = 1."""
        if math.gcd(a, self.k) != 1:
            raise NotCoprimeError(f"{a} not coprime to {self.k}")
        out = [0] * self.k
        for e, c in enumerate(self.coeffs):
            out[(e * a) % self.k] += c
        return CyclotomicInteger(self.k, out)

    def conjugate(self) -> "CyclotomicInteger":
        """Complex conjugation, zeta -> zeta^(k-1)."""
        return self.galois(self.k - 1)

    def norm(self) -> int:
        """Product over all Galois conjugates; a rational integer."""
        prod = CyclotomicInteger.from_int(self.k, 1)
        for a in range(1, self.k + 1):
            if math.gcd(a, self.k) == 1:
                prod = prod * self.galois(a)
        return prod.rational_part()

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_part(self) -> int:
        """The element as a rational integer; NotRationalIntegerError otherwise."""
        if not self.is_rational():
            raise NotRationalIntegerError(f"{self!r} is not a rational integer")
        return self.coeffs[0]

    def __floordiv__(self, other) -> "CyclotomicInteger":
        """Exact division, via multiplication by the remaining conjugates and
        coefficientwise division by the norm."""
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("cyclotomic division by zero")
        cofactor = CyclotomicInteger.from_int(self.k, 1)
        for a in range(2, self.k + 1):
            if math.gcd(a, self.k) == 1:
                cofactor = cofactor * other.galois(a)
        norm = (other * cofactor).rational_part()
        raw = self * cofactor
        quo = []
        for c in raw.coeffs:
            if c % norm:
                raise InexactDivisionError("cyclotomic division is inexact")
            quo.append(c // norm)
        return CyclotomicInteger(self.k, quo)

    def embed(self, j: int = 1) -> complex:
        """Numeric value under zeta -> exp(2 pi i j / k)."""
        zeta = cmath.exp(2j * cmath.pi * j / self.k)
        acc = complex(0)
        for c in reversed(self.coeffs):
            acc = acc * zeta + c
        return acc

    def __repr__(self) -> str:
        return f"CyclotomicInteger(k={self.k}, coeffs={list(self.coeffs)})"


def eval_at_root(p: IntPolynomial, k: int, j: int = 1) -> CyclotomicInteger:
    """Evaluate p at the k-th root of unity zeta^j with gcd(j, k) = 1.

    Exponents fold mod k before reduction mod the cyclotomic polynomial, so
    the result is exact.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if math.gcd(j, k) != 1:
        raise NotCoprimeError(f"j={j} not coprime to k={k}")
    folded = [0] * k
    for e, c in enumerate(p.coeffs):
        folded[(e * j) % k] += c
    return CyclotomicInteger(k, folded)


def squared_modulus(z: CyclotomicInteger) -> int:
    """z times its complex conjugate as a rational integer.

    The product always lies in the real subfield; it lies in Z exactly when
    it is Galois stable, which holds for every theorem value this package
    asserts.  NotRationalIntegerError signals the non-integral case.
    """
    return (z * z.conjugate()).rational_part()


def squared_modulus_element(z: CyclotomicInteger) -> CyclotomicInteger:
    """z times its complex conjugate, kept as an exact cyclotomic element."""
    return z * z.conjugate()
