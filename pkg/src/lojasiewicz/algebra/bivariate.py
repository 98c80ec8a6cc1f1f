"""Sparse polynomials in ``x`` and ``y`` with rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Mapping

from .extended import INFINITE

Monomial = tuple[int, int]


class BivariatePolynomial:
    """Immutable sparse polynomial ``sum c[a, b] x^a y^b`` over the rationals.

    The support map never stores a zero coefficient; the zero polynomial has
    an empty support.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Monomial, Fraction] = {}
        for (a, b), c in items:
            a, b = int(a), int(b)
            if a < 0 or b < 0:
                raise ValueError("negative exponent")
            c = Fraction(c)
            if c:
                clean[(a, b)] = clean.get((a, b), 0) + c
                if not clean[(a, b)]:
                    del clean[(a, b)]
        self._terms = clean
        self._hash = None

    # construction ---------------------------------------------------------

    @classmethod
    def constant(cls, c) -> "BivariatePolynomial":
        return cls({(0, 0): c})

    @classmethod
    def x(cls) -> "BivariatePolynomial":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "BivariatePolynomial":
        return cls({(0, 1): 1})

    @classmethod
    def monomial(cls, a: int, b: int, c=1) -> "BivariatePolynomial":
        return cls({(a, b): c})

    @classmethod
    def _raw(cls, terms: dict) -> "BivariatePolynomial":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # access ---------------------------------------------------------------

    @property
    def support(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def terms(self):
        return self._terms.items()

    def coefficient(self, a: int, b: int) -> Fraction:
        return self._terms.get((a, b), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def degree_y(self) -> int:
        return max((b for _, b in self._terms), default=-1)

    def degree_x(self) -> int:
        return max((a for a, _ in self._terms), default=-1)

    def total_degree(self) -> int:
        return max((a + b for a, b in self._terms), default=-1)

    def constant_term(self) -> Fraction:
        return self.coefficient(0, 0)

    def leading_term(self) -> tuple[Monomial, Fraction]:
        """Leading term in graded-lexicographic order with ``y > x``."""
        mono = max(self._terms, key=lambda m: (m[0] + m[1], m[1]))
        return mono, self._terms[mono]

    # arithmetic -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, BivariatePolynomial):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == BivariatePolynomial.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def _coerce(self, other) -> "BivariatePolynomial":
        if isinstance(other, BivariatePolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return BivariatePolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return BivariatePolynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return BivariatePolynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, Fraction] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                m = (a1 + a2, b1 + b2)
                out[m] = out.get(m, 0) + c1 * c2
        return BivariatePolynomial._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = BivariatePolynomial.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def scale(self, c) -> "BivariatePolynomial":
        c = Fraction(c)
        if not c:
            return BivariatePolynomial()
        return BivariatePolynomial._raw({m: v * c for m, v in self._terms.items()})

    def diff_x(self) -> "BivariatePolynomial":
        return BivariatePolynomial._raw({(a - 1, b): a * c for (a, b), c in self._terms.items() if a})

    def diff_y(self) -> "BivariatePolynomial":
        return BivariatePolynomial._raw({(a, b - 1): b * c for (a, b), c in self._terms.items() if b})

    def __call__(self, x, y):
        return sum((c * x ** a * y ** b for (a, b), c in self._terms.items()), Fraction(0))

    # structure ------------------------------------------------------------

    def order(self):
        """Minimal total degree of the support, or INFINITE for zero."""
        if not self._terms:
            return INFINITE
        return min(a + b for a, b in self._terms)

    def restrict_y_axis(self) -> list[Fraction]:
        """Coefficients of ``f(0, y)`` lowest degree first."""
        deg = max((b for a, b in self._terms if a == 0), default=-1)
        out = [Fraction(0)] * (deg + 1)
        for (a, b), c in self._terms.items():
            if a == 0:
                out[b] = c
        return out

    def restrict_x_axis(self) -> list[Fraction]:
        deg = max((a for a, b in self._terms if b == 0), default=-1)
        out = [Fraction(0)] * (deg + 1)
        for (a, b), c in self._terms.items():
            if b == 0:
                out[a] = c
        return out

    def y_axis_order(self):
        """Order of ``f(0, y)`` (INFINITE if it vanishes)."""
        return min((b for a, b in self._terms if a == 0), default=INFINITE)

    def x_axis_order(self):
        return min((a for a, b in self._terms if b == 0), default=INFINITE)

    def is_y_regular(self) -> bool:
        return bool(self._terms) and self.y_axis_order() == self.order()

    def shear(self, lam) -> "BivariatePolynomial":
        """Return ``f(x + lam*y, y)``."""
        lam = Fraction(lam)
        if not lam:
            return self
        out: dict[Monomial, Fraction] = {}
        for (a, b), c in self._terms.items():
            for k in range(a + 1):
                # x^(a-k) (lam y)^k
                m = (a - k, b + k)
                out[m] = out.get(m, 0) + c * comb(a, k) * lam ** k
        return BivariatePolynomial._raw({m: v for m, v in out.items() if v})

    def as_y_poly(self) -> list[list[Fraction]]:
        """View as a polynomial in ``y`` with dense coefficients in ``Q[x]``."""
        dy = self.degree_y()
        rows: list[list[Fraction]] = [[] for _ in range(dy + 1)]
        for (a, b), c in self._terms.items():
            row = rows[b]
            if len(row) <= a:
                row.extend([Fraction(0)] * (a + 1 - len(row)))
            row[a] = c
        return rows

    @classmethod
    def from_y_poly(cls, rows) -> "BivariatePolynomial":
        return cls._raw({(a, b): c for b, row in enumerate(rows) for a, c in enumerate(row) if c})

    @classmethod
    def from_x_poly(cls, coeffs) -> "BivariatePolynomial":
        return cls._raw({(a, 0): Fraction(c) for a, c in enumerate(coeffs) if c})

    # presentation ---------------------------------------------------------

    def __repr__(self):
        return f"BivariatePolynomial({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (a, b) in sorted(self._terms, key=lambda m: (m[0] + m[1], m[1]), reverse=True):
            c = self._terms[(a, b)]
            mono = "*".join(
                s for s in (
                    "" if a == 0 else ("x" if a == 1 else f"x^{a}"),
                    "" if b == 0 else ("y" if b == 1 else f"y^{b}"),
                ) if s
            )
            mag = abs(c)
            sign = "-" if c < 0 else "+"
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def order(f: BivariatePolynomial):
    return f.order()


def shear(f: BivariatePolynomial, lam) -> BivariatePolynomial:
    return f.shear(lam)


def is_y_regular(f: BivariatePolynomial) -> bool:
    if f.is_zero():
        raise ValueError("y-regularity of the zero polynomial")
    return f.is_y_regular()
