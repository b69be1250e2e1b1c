"""Generic Iwahori-Hecke algebra of a weighted Coxeter datum, in the
T-basis over Laurent polynomials in u.

The defining relations, with L the weight function:

    T_s * T_w = T_(sw)                                  if length(sw) > length(w)
    T_s * T_w = u^L(s) * T_(sw) + (u^L(s) - 1) * T_w    otherwise

The symmetrizing trace tau picks out the coefficient of T_identity; its
dual basis is T_w^ = u^-L(w) * T_(w^-1), which gives the bilinear law
tau(T_w * T_w') = u^L(w) * [w' == w^-1], checked exhaustively in tests.

Elements render as "(poly) * T[word]" summands joined by " + ", ordered
by the datum's deterministic element order, and parse back exactly.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping

from .coxeter import CoxeterDatum, GroupElement
from .laurent import LaurentPoly

__all__ = [
    "HeckeElement",
    "DatumMismatch",
    "t_basis",
    "unit",
    "zero",
    "generator_times_basis",
    "tau",
    "tau_bilinear",
]


class DatumMismatch(ValueError):
    """Raised when elements of different datums are combined."""


class HeckeElement:
    """A finite A-linear combination of T-basis elements, A = Q[u, u^-1].

    Immutable; zero coefficients are never stored.
    """

    __slots__ = ("_datum", "_support")

    def __init__(
        self,
        datum: CoxeterDatum,
        support: Mapping[GroupElement, LaurentPoly] | None = None,
    ):
        data: dict[GroupElement, LaurentPoly] = {}
        if support:
            for w, poly in support.items():
                if w.datum is not datum:
                    raise DatumMismatch(
                        "support element belongs to a different datum"
                    )
                if not isinstance(poly, LaurentPoly):
                    poly = LaurentPoly.constant(poly)
                if poly:
                    data[w] = poly
        self._datum = datum
        self._support = data

    @property
    def datum(self) -> CoxeterDatum:
        return self._datum

    def support(self) -> list[tuple[GroupElement, LaurentPoly]]:
        """Terms ordered by the datum's element order."""
        return sorted(self._support.items(), key=lambda kv: kv[0].index)

    def coefficient(self, w: GroupElement) -> LaurentPoly:
        if w.datum is not self._datum:
            raise DatumMismatch("element belongs to a different datum")
        return self._support.get(w, LaurentPoly.zero())

    def is_zero(self) -> bool:
        return not self._support

    def __bool__(self) -> bool:
        return bool(self._support)

    def _check(self, other: "HeckeElement") -> None:
        if self._datum is not other._datum:
            raise DatumMismatch("cannot combine elements over different datums")

    # ----- module operations ---------------------------------------------

    def __add__(self, other) -> "HeckeElement":
        if not isinstance(other, HeckeElement):
            return NotImplemented
        self._check(other)
        data = dict(self._support)
        for w, poly in other._support.items():
            data[w] = data.get(w, LaurentPoly.zero()) + poly
        return HeckeElement(self._datum, data)

    def __neg__(self) -> "HeckeElement":
        return HeckeElement(
            self._datum, {w: -poly for w, poly in self._support.items()}
        )

    def __sub__(self, other) -> "HeckeElement":
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self + (-other)

    def scale(self, scalar) -> "HeckeElement":
        if not isinstance(scalar, LaurentPoly):
            scalar = LaurentPoly.constant(scalar)
        return HeckeElement(
            self._datum, {w: scalar * poly for w, poly in self._support.items()}
        )

    # ----- algebra multiplication ------------------------------------------

    def _left_generator(self, s: int) -> "HeckeElement":
        """T_s * self via the defining relations."""
        d = self._datum
        ws = d.weights[s]
        u_l = LaurentPoly.monomial(ws)
        u_l_minus_1 = u_l - 1
        data: dict[GroupElement, LaurentPoly] = {}

        def bump(w: GroupElement, poly: LaurentPoly) -> None:
            cur = data.get(w)
            data[w] = poly if cur is None else cur + poly

        for w, poly in self._support.items():
            sw = d.left_multiply_generator(s, w)
            if d.length(sw) > d.length(w):
                bump(sw, poly)
            else:
                bump(sw, u_l * poly)
                bump(w, u_l_minus_1 * poly)
        return HeckeElement(d, data)

    def __mul__(self, other) -> "HeckeElement":
        if isinstance(other, (LaurentPoly, int, Fraction)):
            return self.scale(other)
        if not isinstance(other, HeckeElement):
            return NotImplemented
        self._check(other)
        d = self._datum
        total = HeckeElement(d)
        for w, poly in self._support.items():
            term = other
            for s in reversed(d.reduced_word(w)):
                term = term._left_generator(s)
            total = total + term.scale(poly)
        return total

    def __rmul__(self, other) -> "HeckeElement":
        if isinstance(other, (LaurentPoly, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self._datum is other._datum and self._support == other._support

    def __hash__(self) -> int:
        return hash(
            (id(self._datum), tuple(sorted((w.index, p) for w, p in self._support.items())))
        )

    # ----- text form ---------------------------------------------------------

    def __str__(self) -> str:
        if not self._support:
            return "0"
        d = self._datum
        return " + ".join(
            f"({poly}) * T[{d.render_element(w)}]" for w, poly in self.support()
        )

    def __repr__(self) -> str:
        return f"HeckeElement({str(self)!r})"

    @classmethod
    def parse(cls, datum: CoxeterDatum, text: str) -> "HeckeElement":
        """Parse the canonical rendering back exactly."""
        text = text.strip()
        if text == "0":
            return cls(datum)
        pattern = re.compile(r"\(([^()]*)\)\s*\*\s*T\[([^\]]*)\]")
        matches = list(pattern.finditer(text))
        if not matches:
            raise ValueError(f"no T-basis terms in {text!r}")
        leftover = pattern.sub("", text).replace("+", "").strip()
        if leftover:
            raise ValueError(f"unparsed content {leftover!r} in {text!r}")
        data: dict[GroupElement, LaurentPoly] = {}
        for match in matches:
            poly = LaurentPoly.parse(match.group(1))
            w = datum.parse_element(match.group(2))
            if w in data:
                raise ValueError(f"duplicate basis element in {text!r}")
            data[w] = poly
        return cls(datum, data)


def t_basis(datum: CoxeterDatum, w: GroupElement) -> HeckeElement:
    return HeckeElement(datum, {w: LaurentPoly.one()})


def unit(datum: CoxeterDatum) -> HeckeElement:
    return t_basis(datum, datum.identity)


def zero(datum: CoxeterDatum) -> HeckeElement:
    return HeckeElement(datum)


def generator_times_basis(
    datum: CoxeterDatum, s: int, w: GroupElement
) -> HeckeElement:
    """T_s * T_w by the defining relations."""
    return t_basis(datum, w)._left_generator(s)


def tau(h: HeckeElement) -> LaurentPoly:
    """The symmetrizing trace: the coefficient of T_identity."""
    return h.coefficient(h.datum.identity)


def tau_bilinear(
    datum: CoxeterDatum, w1: GroupElement, w2: GroupElement
) -> LaurentPoly:
    """tau(T_w1 * T_w2), by explicit multiplication."""
    return tau(t_basis(datum, w1) * t_basis(datum, w2))
