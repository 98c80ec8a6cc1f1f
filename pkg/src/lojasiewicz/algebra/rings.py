"""Coefficient rings: the rationals and towers of residue rings over them.

An :class:`ExtensionRing` is ``B[z]/(M(z))`` for a base ring ``B`` (the
rationals or another extension) and a monic squarefree modulus ``M``.  Such a
ring is a finite product of fields.  Arithmetic never factors ``M``; when an
inversion meets a zero divisor it raises :class:`Split` carrying the
factorization of ``M`` it discovered, and the caller recomputes in each factor
ring (dynamic evaluation).

Ring objects are stateless; elements are plain Python values (``Fraction``
for the rationals, tuples of base elements of length ``deg M`` otherwise) so
the polynomial kernels stay cheap.  :class:`ExtensionElement` wraps an element
together with its ring for interactive use.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import upoly


class Split(ArithmeticError):
    """A zero divisor was met in ``ring``; its modulus factors as ``factors``."""

    def __init__(self, ring: "ExtensionRing", factors):
        self.ring = ring
        self.factors = tuple(tuple(f) for f in factors)
        super().__init__(f"modulus of {ring!r} splits into {len(self.factors)} factors")


class RationalField:
    depth = 0
    absolute_degree = 1
    key = ("QQ",)
    zero = Fraction(0)
    one = Fraction(1)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash(self.key)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def inv(a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    @staticmethod
    def is_zero(a):
        return not a

    @staticmethod
    def from_int(n):
        return Fraction(n)

    def from_rational(self, q):
        return Fraction(q)

    def lift(self, a, ring):
        if ring is not self and ring != self:
            raise ValueError("can only lift into a ring from its own tower")
        return a

    def sort_key(self, a):
        return (a,)

    def format(self, a) -> str:
        return str(a)

    def tower(self):
        return ()


QQ = RationalField()


class ExtensionRing:
    """``base[z]/(modulus)`` with ``modulus`` monic, squarefree, of degree >= 2."""

    def __init__(self, base, modulus):
        modulus = tuple(modulus)
        if len(modulus) < 3:
            raise ValueError("modulus must have degree at least 2")
        if modulus[-1] != base.one:
            raise ValueError("modulus must be monic")
        self.base = base
        self.modulus = modulus
        self.n = len(modulus) - 1
        self.depth = base.depth + 1
        self.absolute_degree = base.absolute_degree * self.n
        self.key = (base.key, modulus)
        self.zero = (base.zero,) * self.n
        self.one = (base.one,) + (base.zero,) * (self.n - 1)
        self._hash = hash(self.key)

    @property
    def name(self) -> str:
        return f"z{self.depth}"

    def __repr__(self):
        return f"ExtensionRing({self.format_modulus()})"

    def __eq__(self, other):
        return isinstance(other, ExtensionRing) and self.key == other.key

    def __hash__(self):
        return self._hash

    # elements ---------------------------------------------------------

    def gen(self):
        B = self.base
        return (B.zero, B.one) + (B.zero,) * (self.n - 2)

    def from_base(self, a):
        return (a,) + (self.base.zero,) * (self.n - 1)

    def from_int(self, k):
        return self.from_base(self.base.from_int(k))

    def from_rational(self, q):
        return self.from_base(self.base.from_rational(q))

    def from_poly(self, p):
        """Reduce a polynomial in the generator (list of base elements)."""
        r = upoly.rem(self.base, upoly.strip(self.base, p), list(self.modulus))
        return tuple(r) + (self.base.zero,) * (self.n - len(r))

    def lift(self, a, ring):
        """Embed an element of ``ring`` (a level of this tower) into this ring."""
        if ring == self:
            return a
        return self.from_base(self.base.lift(a, ring))

    def tower(self):
        return self.base.tower() + (self,)

    # arithmetic -------------------------------------------------------

    def add(self, a, b):
        add = self.base.add
        return tuple(add(x, y) for x, y in zip(a, b, strict=False))

    def sub(self, a, b):
        sub = self.base.sub
        return tuple(sub(x, y) for x, y in zip(a, b, strict=False))

    def neg(self, a):
        neg = self.base.neg
        return tuple(neg(x) for x in a)

    def is_zero(self, a):
        is_zero = self.base.is_zero
        return all(is_zero(x) for x in a)

    def mul(self, a, b):
        B = self.base
        n = self.n
        prod = [B.zero] * (2 * n - 1)
        for i, x in enumerate(a):
            if B.is_zero(x):
                continue
            for j, y in enumerate(b):
                if B.is_zero(y):
                    continue
                prod[i + j] = B.add(prod[i + j], B.mul(x, y))
        m = self.modulus
        for k in range(2 * n - 2, n - 1, -1):
            c = prod[k]
            if B.is_zero(c):
                continue
            for j in range(n):
                prod[k - n + j] = B.sub(prod[k - n + j], B.mul(c, m[j]))
        return tuple(prod[:n])

    def inv(self, a):
        """Inverse of ``a``; raises :class:`Split` if ``a`` is a nonzero zero divisor."""
        B = self.base
        p = upoly.strip(B, a)
        if not p:
            raise ZeroDivisionError("inverse of zero")
        g, s, _ = upoly.xgcd(B, p, list(self.modulus))
        if len(g) > 1:
            cofactor = upoly.exact_div(B, list(self.modulus), g)
            raise Split(self, (g, cofactor))
        return tuple(s) + (B.zero,) * (self.n - len(s))

    # presentation -----------------------------------------------------

    def sort_key(self, a):
        out = ()
        for x in a:
            out += self.base.sort_key(x)
        return out

    def format(self, a) -> str:
        terms = []
        for i, c in enumerate(a):
            if self.base.is_zero(c):
                continue
            cs = self.base.format(c)
            if self.base.depth or (not isinstance(c, Fraction)) or ("+" in cs or "-" in cs[1:]):
                cs = f"({cs})" if i else cs
            if i == 0:
                terms.append(cs)
            else:
                mono = self.name if i == 1 else f"{self.name}^{i}"
                if cs == "1":
                    terms.append(mono)
                elif cs == "-1":
                    terms.append("-" + mono)
                else:
                    terms.append(f"{cs}*{mono}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    def format_modulus(self) -> str:
        parts = []
        for i in range(self.n, -1, -1):
            c = self.modulus[i]
            if self.base.is_zero(c):
                continue
            cs = self.base.format(c)
            if self.base.depth:
                cs = f"({cs})"
            if i == 0:
                parts.append(cs)
            else:
                mono = self.name if i == 1 else f"{self.name}^{i}"
                parts.append(mono if cs == "1" else ("-" + mono if cs == "-1" else f"{cs}*{mono}"))
        return " + ".join(parts).replace("+ -", "- ")


def ring_from_moduli(moduli) -> "RationalField | ExtensionRing":
    """Rebuild a tower from a sequence of moduli (each over the previous level)."""
    R = QQ
    for m in moduli:
        R = ExtensionRing(R, m)
    return R


@dataclass(frozen=True)
class ExtensionElement:
    """An element of a residue ring, with operator overloading.

    >>> R = ExtensionRing(QQ, (Fraction(1), Fraction(0), Fraction(1)))
    >>> i = ExtensionElement(R, R.gen())
    >>> i * i == ExtensionElement.from_int(R, -1)
    True
    """

    ring: object
    value: object

    @classmethod
    def from_int(cls, ring, k):
        return cls(ring, ring.from_int(k))

    def _coerce(self, other):
        if isinstance(other, ExtensionElement):
            if other.ring != self.ring:
                raise ValueError("elements of different rings")
            return other.value
        return self.ring.from_rational(Fraction(other))

    def __add__(self, other):
        return ExtensionElement(self.ring, self.ring.add(self.value, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return ExtensionElement(self.ring, self.ring.sub(self.value, self._coerce(other)))

    def __rsub__(self, other):
        return ExtensionElement(self.ring, self.ring.sub(self._coerce(other), self.value))

    def __neg__(self):
        return ExtensionElement(self.ring, self.ring.neg(self.value))

    def __mul__(self, other):
        return ExtensionElement(self.ring, self.ring.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def inverse(self) -> "ExtensionElement":
        return ExtensionElement(self.ring, self.ring.inv(self.value))

    def __truediv__(self, other):
        return self * ExtensionElement(self.ring, self._coerce(other)).inverse()

    def __pow__(self, n: int):
        out = ExtensionElement(self.ring, self.ring.one)
        base = self
        if n < 0:
            base, n = self.inverse(), -n
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_zero(self) -> bool:
        return self.ring.is_zero(self.value)

    @property
    def representative(self):
        return self.value

    @property
    def modulus(self):
        return getattr(self.ring, "modulus", None)

    def __str__(self):
        return self.ring.format(self.value)
