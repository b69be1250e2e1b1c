"""Exact arithmetic for Laurent polynomials in one variable u over Q,
cyclotomic polynomials, and the ring Z[zeta_e] of cyclotomic integers.

Everything here is exact: coefficients are `fractions.Fraction`, cyclotomic
integers are integer vectors reduced modulo the e-th cyclotomic polynomial.
No floating point anywhere.

The canonical form of a Laurent polynomial never stores zero coefficients,
so equality is plain dictionary equality.

>>> p = LaurentPoly.parse("2*u^-3 + 1*u^1")
>>> p.valuation()
-3
>>> str(p * p)
'4*u^-6 + 4*u^-2 + 1*u^2'
>>> str(cyclotomic_polynomial(6))
'1*u^0 + -1*u^1 + 1*u^2'
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction
from typing import Iterator, Mapping, Union

__all__ = [
    "LaurentPoly",
    "CyclotomicInt",
    "ZeroPolynomial",
    "NonIntegerCoefficients",
    "PrimeDividesQ",
    "cyclotomic_polynomial",
    "specialize_cyclotomic",
    "specialize_mod_prime",
    "euler_phi",
    "is_prime",
]

Scalar = Union[int, Fraction]


class ZeroPolynomial(ValueError):
    """Raised when an operation needs a nonzero polynomial (e.g. valuation)."""


class NonIntegerCoefficients(ValueError):
    """Raised when an operation requires integer (or l-integral) coefficients."""


class PrimeDividesQ(ValueError):
    """Raised when reducing at a prime l that divides the specialization point q."""


def is_prime(n: int) -> bool:
    """Deterministic primality by trial division; fine for the sizes used here.

    >>> [k for k in range(20) if is_prime(k)]
    [2, 3, 5, 7, 11, 13, 17, 19]
    """
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@functools.cache
def euler_phi(n: int) -> int:
    """Euler's totient, by trial-division factorization.

    >>> [euler_phi(e) for e in (1, 2, 6, 12)]
    [1, 1, 2, 4]
    """
    if n < 1:
        raise ValueError(f"euler_phi needs n >= 1, got {n}")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            result -= result // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        result -= result // m
    return result


class LaurentPoly:
    """A Laurent polynomial in u with exact rational coefficients.

    Immutable. The term map never contains zero coefficients, so two equal
    polynomials always have identical term maps.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Scalar] | None = None):
        data: dict[int, Fraction] = {}
        if terms:
            for exp, coeff in terms.items():
                c = Fraction(coeff)
                if c:
                    data[int(exp)] = c
        self._terms = data

    # ----- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def constant(cls, c: Scalar) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, exp: int, coeff: Scalar = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    # ----- canonical text form ------------------------------------------

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Parse the canonical rendering back, bit-exactly.

        >>> LaurentPoly.parse("-3/2*u^-2 + 1*u^0") == LaurentPoly({-2: Fraction(-3, 2), 0: 1})
        True
        >>> LaurentPoly.parse("0").is_zero()
        True
        """
        text = text.strip()
        if text == "0":
            return cls.zero()
        terms: dict[int, Fraction] = {}
        for token in text.split("+"):
            token = token.strip()
            if not token:
                raise ValueError(f"empty term in {text!r}")
            coeff_text, sep, exp_text = token.partition("*u^")
            if not sep:
                raise ValueError(f"malformed term {token!r}")
            exp = int(exp_text)
            if exp in terms:
                raise ValueError(f"duplicate exponent {exp} in {text!r}")
            terms[exp] = Fraction(coeff_text)
        return cls(terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*u^{k}" for k, c in sorted(self._terms.items()))

    def __repr__(self) -> str:
        return f"LaurentPoly.parse({str(self)!r})"

    # ----- inspection ---------------------------------------------------

    def items(self) -> Iterator[tuple[int, Fraction]]:
        """Terms as (exponent, coefficient), ascending in the exponent."""
        return iter(sorted(self._terms.items()))

    def coefficient(self, exp: int) -> Fraction:
        return self._terms.get(exp, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def valuation(self) -> int:
        """Smallest exponent with nonzero coefficient."""
        if not self._terms:
            raise ZeroPolynomial("the zero polynomial has no valuation")
        return min(self._terms)

    def degree(self) -> int:
        """Largest exponent with nonzero coefficient."""
        if not self._terms:
            raise ZeroPolynomial("the zero polynomial has no degree")
        return max(self._terms)

    def leading_coefficient_at_valuation(self) -> Fraction:
        return self._terms[self.valuation()]

    def has_integer_coefficients(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    def evaluate(self, x: Fraction | int) -> Fraction:
        """Exact evaluation at u = x (x != 0 if negative exponents occur)."""
        x = Fraction(x)
        total = Fraction(0)
        for exp, coeff in self._terms.items():
            total += coeff * x**exp
        return total

    # ----- ring operations ----------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly({0: other})
        return None

    def __add__(self, other) -> "LaurentPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        terms = dict(self._terms)
        for exp, coeff in rhs._terms.items():
            terms[exp] = terms.get(exp, Fraction(0)) + coeff
        return LaurentPoly(terms)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other) -> "LaurentPoly":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs + (-self)

    def __mul__(self, other) -> "LaurentPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        terms: dict[int, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in rhs._terms.items():
                exp = e1 + e2
                terms[exp] = terms.get(exp, Fraction(0)) + c1 * c2
        return LaurentPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"only nonnegative integer powers, got {n!r}")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._terms == rhs._terms

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._terms.items())))


U = LaurentPoly.monomial(1)


def _divide_exact(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Exact division in Q[u, u^-1]; raises ValueError on a nonzero remainder."""
    if den.is_zero():
        raise ZeroPolynomial("division by the zero polynomial")
    if num.is_zero():
        return LaurentPoly.zero()
    shift = num.valuation() - den.valuation()
    # Work with dense ordinary polynomials, numerator shifted to valuation 0.
    nv, dv = num.valuation(), den.valuation()
    ncoeffs = [num.coefficient(nv + i) for i in range(num.degree() - nv + 1)]
    dcoeffs = [den.coefficient(dv + i) for i in range(den.degree() - dv + 1)]
    qcoeffs = [Fraction(0)] * (len(ncoeffs) - len(dcoeffs) + 1)
    rem = list(ncoeffs)
    lead = dcoeffs[-1]
    for i in range(len(qcoeffs) - 1, -1, -1):
        q = rem[i + len(dcoeffs) - 1] / lead
        qcoeffs[i] = q
        if q:
            for j, d in enumerate(dcoeffs):
                rem[i + j] -= q * d
    if any(rem[: len(dcoeffs) - 1]):
        raise ValueError("inexact polynomial division")
    return LaurentPoly({shift + i: c for i, c in enumerate(qcoeffs)})


@functools.cache
def cyclotomic_polynomial(e: int) -> LaurentPoly:
    """The e-th cyclotomic polynomial Phi_e in u, monic with integer coefficients.

    Computed by dividing u^e - 1 by Phi_d for all proper divisors d of e.

    >>> str(cyclotomic_polynomial(1))
    '-1*u^0 + 1*u^1'
    >>> str(cyclotomic_polynomial(4))
    '1*u^0 + 1*u^2'
    """
    if e < 1:
        raise ValueError(f"cyclotomic_polynomial needs e >= 1, got {e}")
    num = LaurentPoly({e: 1, 0: -1})
    den = LaurentPoly.one()
    for d in range(1, e):
        if e % d == 0:
            den = den * cyclotomic_polynomial(d)
    phi = _divide_exact(num, den)
    assert phi.has_integer_coefficients()
    assert phi.degree() == euler_phi(e)
    assert phi.coefficient(phi.degree()) == 1
    return phi


class CyclotomicInt:
    """An element of Z[zeta_e], stored as an integer vector of length phi(e)
    giving its coordinates in the basis 1, zeta, ..., zeta^(phi(e)-1),
    reduced modulo the e-th cyclotomic polynomial.
    """

    __slots__ = ("_order", "_coeffs")

    def __init__(self, order: int, coeffs: tuple[int, ...]):
        if order < 1:
            raise ValueError(f"order must be >= 1, got {order}")
        phi = euler_phi(order)
        if len(coeffs) != phi:
            raise ValueError(f"need {phi} coordinates for order {order}")
        self._order = order
        self._coeffs = tuple(int(c) for c in coeffs)

    @property
    def order(self) -> int:
        return self._order

    @property
    def coordinates(self) -> tuple[int, ...]:
        return self._coeffs

    @classmethod
    def zero(cls, order: int) -> "CyclotomicInt":
        return cls(order, (0,) * euler_phi(order))

    @classmethod
    def one(cls, order: int) -> "CyclotomicInt":
        return cls.from_int(order, 1)

    @classmethod
    def from_int(cls, order: int, n: int) -> "CyclotomicInt":
        coeffs = [0] * euler_phi(order)
        coeffs[0] = n
        return cls(order, tuple(coeffs))

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> "CyclotomicInt":
        """zeta_e^power, reduced mod Phi_e.

        >>> CyclotomicInt.zeta(4, 2) == CyclotomicInt.from_int(4, -1)
        True
        """
        return _zeta_powers(order)[power % order]

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def __bool__(self) -> bool:
        return any(self._coeffs)

    def _check_order(self, other: "CyclotomicInt") -> None:
        if self._order != other._order:
            raise ValueError(
                f"mixed cyclotomic orders {self._order} and {other._order}"
            )

    def __add__(self, other) -> "CyclotomicInt":
        if not isinstance(other, CyclotomicInt):
            return NotImplemented
        self._check_order(other)
        return CyclotomicInt(
            self._order, tuple(a + b for a, b in zip(self._coeffs, other._coeffs))
        )

    def __neg__(self) -> "CyclotomicInt":
        return CyclotomicInt(self._order, tuple(-a for a in self._coeffs))

    def __sub__(self, other) -> "CyclotomicInt":
        if not isinstance(other, CyclotomicInt):
            return NotImplemented
        self._check_order(other)
        return CyclotomicInt(
            self._order, tuple(a - b for a, b in zip(self._coeffs, other._coeffs))
        )

    def __mul__(self, other) -> "CyclotomicInt":
        if isinstance(other, int):
            return CyclotomicInt(self._order, tuple(a * other for a in self._coeffs))
        if not isinstance(other, CyclotomicInt):
            return NotImplemented
        self._check_order(other)
        phi = len(self._coeffs)
        prod = [0] * (2 * phi - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    if b:
                        prod[i + j] += a * b
        rows = _reduction_rows(self._order)
        out = prod[:phi]
        for k in range(phi, 2 * phi - 1):
            c = prod[k]
            if c:
                row = rows[k - phi]
                for i in range(phi):
                    out[i] += c * row[i]
        return CyclotomicInt(self._order, tuple(out))

    def __rmul__(self, other) -> "CyclotomicInt":
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, CyclotomicInt):
            return NotImplemented
        return self._order == other._order and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._order, self._coeffs))

    def __repr__(self) -> str:
        return f"CyclotomicInt(order={self._order}, coeffs={self._coeffs})"


@functools.cache
def _reduction_rows(order: int) -> tuple[tuple[int, ...], ...]:
    """Row k-phi gives the coordinates of u^k mod Phi_order, phi <= k <= 2phi-2."""
    phi = euler_phi(order)
    poly = cyclotomic_polynomial(order)
    base = tuple(-int(poly.coefficient(i)) for i in range(phi))  # u^phi
    rows = [base]
    for _ in range(phi - 2):
        prev = rows[-1]
        shifted = [0] + list(prev[: phi - 1])
        top = prev[phi - 1]
        if top:
            shifted = [s + top * b for s, b in zip(shifted, base)]
        rows.append(tuple(shifted))
    return tuple(rows)


@functools.cache
def _zeta_powers(order: int) -> tuple[CyclotomicInt, ...]:
    """zeta_order^k for k = 0..order-1, each reduced mod Phi_order."""
    phi = euler_phi(order)
    poly = cyclotomic_polynomial(order)
    base = [-int(poly.coefficient(i)) for i in range(phi)]
    powers = []
    cur = [0] * phi
    cur[0] = 1
    for _ in range(order):
        powers.append(CyclotomicInt(order, tuple(cur)))
        top = cur[phi - 1]
        cur = [0] + cur[: phi - 1]
        if top:
            cur = [c + top * b for c, b in zip(cur, base)]
    return tuple(powers)


def specialize_cyclotomic(p: LaurentPoly, e: int) -> CyclotomicInt:
    """Substitute u -> zeta_e into p; p must have integer coefficients.

    Negative exponents go to zeta_e^(k mod e), which is exact since zeta_e
    is a unit of Z[zeta_e].

    >>> specialize_cyclotomic(cyclotomic_polynomial(6), 6).is_zero()
    True
    """
    if e < 1:
        raise ValueError(f"need e >= 1, got {e}")
    if not p.has_integer_coefficients():
        raise NonIntegerCoefficients(
            f"cannot specialize non-integer coefficients: {p}"
        )
    powers = _zeta_powers(e)
    total = CyclotomicInt.zero(e)
    for exp, coeff in p.items():
        total = total + powers[exp % e] * int(coeff)
    return total


def specialize_mod_prime(p: LaurentPoly, q: int, ell: int) -> int:
    """Evaluate p at u = q in the prime field F_ell, exactly.

    Negative exponents use the inverse of q mod ell, hence ell must not
    divide q. Rational coefficients are accepted as long as their
    denominators are invertible mod ell.

    >>> specialize_mod_prime(LaurentPoly({-1: 1, 2: 3}), 2, 7)
    2
    """
    if not is_prime(ell):
        raise ValueError(f"modulus {ell} is not prime")
    if q % ell == 0:
        raise PrimeDividesQ(f"prime {ell} divides specialization point {q}")
    total = 0
    for exp, coeff in p.items():
        if coeff.denominator % ell == 0:
            raise NonIntegerCoefficients(
                f"coefficient {coeff} is not {ell}-integral"
            )
        term = pow(q, exp, ell) * (coeff.numerator % ell)
        if coeff.denominator != 1:
            term *= pow(coeff.denominator, -1, ell)
        total += term
    return total % ell


def _selftest() -> None:
    import doctest

    failures, _ = doctest.testmod(optionflags=doctest.NORMALIZE_WHITESPACE)
    if failures:
        raise SystemExit(1)


if __name__ == "__main__":
    _selftest()
