"""Truncated power series in ``t`` over a coefficient ring."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bivariate import BivariatePolynomial
from .rings import QQ


class _ZeroToPrecision:
    def __repr__(self):
        return "ZERO_TO_PRECISION"


ZERO_TO_PRECISION = _ZeroToPrecision()


@dataclass(frozen=True)
class TruncatedSeries:
    """``sum coeffs[k] t^k + O(t^precision)``; trailing zeros are allowed."""

    coeffs: tuple
    precision: int
    ring: object = QQ

    def __post_init__(self):
        if len(self.coeffs) > self.precision:
            object.__setattr__(self, "coeffs", tuple(self.coeffs[: self.precision]))

    @classmethod
    def from_rationals(cls, coeffs, precision: int) -> "TruncatedSeries":
        return cls(tuple(Fraction(c) for c in coeffs), precision, QQ)

    @classmethod
    def monomial(cls, ring, c, k: int, precision: int) -> "TruncatedSeries":
        if k >= precision:
            return cls((), precision, ring)
        return cls((ring.zero,) * k + (c,), precision, ring)

    def coefficient(self, k: int):
        if k >= self.precision:
            raise IndexError("coefficient beyond precision")
        return self.coeffs[k] if k < len(self.coeffs) else self.ring.zero

    def dense(self) -> list:
        return list(self.coeffs) + [self.ring.zero] * (self.precision - len(self.coeffs))

    def order(self, below=None):
        """Smallest exponent with a nonzero coefficient, or ZERO_TO_PRECISION.

        Over a residue ring the first coefficient that is not identically zero
        is checked to be a unit, which raises ``Split`` if it is a zero divisor.
        ``below`` restricts the search to exponents smaller than it.
        """
        R = self.ring
        stop = self.precision if below is None else min(below, self.precision)
        for k, c in enumerate(self.coeffs[:stop]):
            if not R.is_zero(c):
                if R is not QQ:
                    R.inv(c)
                return k
        return ZERO_TO_PRECISION

    def truncate(self, precision: int) -> "TruncatedSeries":
        if precision > self.precision:
            raise ValueError("cannot raise precision by truncation")
        return TruncatedSeries(tuple(self.coeffs[:precision]), precision, self.ring)

    def lift(self, ring) -> "TruncatedSeries":
        if ring == self.ring:
            return self
        return TruncatedSeries(tuple(ring.lift(c, self.ring) for c in self.coeffs), self.precision, ring)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        R = self.ring
        p = min(self.precision, other.precision)
        a, b = self.dense()[:p], other.dense()[:p]
        return TruncatedSeries(tuple(R.add(u, v) for u, v in zip(a, b, strict=False)), p, R)

    def __neg__(self):
        R = self.ring
        return TruncatedSeries(tuple(R.neg(c) for c in self.coeffs), self.precision, R)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        p = min(self.precision, other.precision)
        return TruncatedSeries(tuple(mul_trunc(self.ring, self.coeffs, other.coeffs, p)), p, self.ring)

    def compose(self, tau: "TruncatedSeries") -> "TruncatedSeries":
        """``self(tau(t))`` for ``tau`` of positive order."""
        k = tau.order()
        if k is ZERO_TO_PRECISION or k < 1:
            raise ValueError("inner series must have positive order")
        R = self.ring
        # truncation of self costs O(t^(k*P)); truncation of tau costs O(t^P_tau)
        prec = min(k * self.precision, tau.precision)
        acc: list = []
        for c in reversed(self.dense()):
            acc = mul_trunc(R, acc, tau.coeffs, prec)
            if acc:
                acc[0] = R.add(acc[0], c)
            elif not R.is_zero(c):
                acc = [c]
        return TruncatedSeries(tuple(acc[:prec]), prec, R)

    def format(self, var: str = "t") -> str:
        R = self.ring
        parts = []
        for k, c in enumerate(self.coeffs):
            if R.is_zero(c):
                continue
            cs = R.format(c)
            if R is not QQ or ("/" in cs and k):
                cs = f"({cs})" if k else cs
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"{cs}*{mono}")
        body = " + ".join(parts).replace("+ -", "- ") if parts else "0"
        return f"{body} + O({var}^{self.precision})"

    def __str__(self):
        return self.format()


def mul_trunc(R, a, b, prec: int) -> list:
    """Product of coefficient sequences truncated below ``t^prec``."""
    la = min(len(a), prec)
    lb = min(len(b), prec)
    if not la or not lb:
        return []
    n = min(la + lb - 1, prec)
    out = [R.zero] * n
    add, mul, is_zero = R.add, R.mul, R.is_zero
    for i in range(la):
        ai = a[i]
        if is_zero(ai):
            continue
        for j in range(min(lb, n - i)):
            bj = b[j]
            if is_zero(bj):
                continue
            out[i + j] = add(out[i + j], mul(ai, bj))
    return out


def inverse_trunc(R, a, prec: int) -> list:
    """Inverse of a series with unit constant term, modulo ``t^prec``."""
    inv0 = R.inv(a[0])
    out = [inv0]
    for k in range(1, prec):
        acc = R.zero
        for j in range(1, min(k, len(a) - 1) + 1):
            acc = R.add(acc, R.mul(a[j], out[k - j]))
        out.append(R.neg(R.mul(acc, inv0)))
    return out


def power_trunc(R, a, n: int, prec: int) -> list:
    out = [R.one] if prec > 0 else []
    base = list(a[:prec])
    while n:
        if n & 1:
            out = mul_trunc(R, out, base, prec)
        n >>= 1
        if n:
            base = mul_trunc(R, base, base, prec)
    return out


def substitute(f: BivariatePolynomial, phi) -> TruncatedSeries:
    """``f(phi1(t), phi2(t))`` truncated at the common precision of the components."""
    s1, s2 = phi
    if s1.precision != s2.precision:
        raise ValueError("components of the parametrization have different precision")
    if s1.ring != s2.ring:
        raise ValueError("components of the parametrization live in different rings")
    for s in (s1, s2):
        if s.coeffs and not s.ring.is_zero(s.coeffs[0]):
            raise ValueError("parametrization must map the origin to the origin")
    return substitute_raw(f, s1.ring, s1.coeffs, s2.coeffs, s1.precision)


def substitute_raw(f: BivariatePolynomial, R, xs, ys, prec: int) -> TruncatedSeries:
    rows = f.as_y_poly()
    # Horner in y; each row is a polynomial in x evaluated by Horner as well
    x_pows: dict[int, list] = {}

    def xpow(a):
        if a not in x_pows:
            x_pows[a] = power_trunc(R, xs, a, prec)
        return x_pows[a]

    acc: list = []
    for row in reversed(rows):
        acc = mul_trunc(R, acc, ys, prec)
        for a, c in enumerate(row):
            if not c:
                continue
            term = xpow(a)
            cr = R.from_rational(c)
            if len(acc) < len(term):
                acc = acc + [R.zero] * (len(term) - len(acc))
            for k, v in enumerate(term):
                if not R.is_zero(v):
                    acc[k] = R.add(acc[k], R.mul(cr, v))
    while acc and R.is_zero(acc[-1]):
        acc.pop()
    return TruncatedSeries(tuple(acc), prec, R)
