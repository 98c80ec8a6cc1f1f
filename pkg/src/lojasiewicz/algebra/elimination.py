"""Subresultant remainder sequences over ``Q[x]``: resultants, gcds, squarefree parts.

Polynomials in ``y`` are lists of dense ``Q[x]`` coefficients (themselves
lists of ``Fraction``), lowest degree first.  The sequences are the classical
fraction-free ones, so every division below is exact in ``Q[x]``.
"""

from __future__ import annotations

from fractions import Fraction

from . import upoly
from .bivariate import BivariatePolynomial
from .rings import QQ

_ONE = [Fraction(1)]


def _qx_pow(p, n):
    return upoly.power(QQ, p, n)


def _qx_div(p, q):
    return upoly.exact_div(QQ, p, q)


def _y_strip(P):
    P = list(P)
    while P and not P[-1]:
        P.pop()
    return P


def _y_prem(A, B):
    """Pseudo-remainder of ``A`` by ``B`` in ``Q[x][y]``."""
    db = len(B) - 1
    lc = B[-1]
    r = [list(c) for c in A]
    e = len(r) - 1 - db + 1
    while r and len(r) - 1 >= db:
        c = r[-1]
        k = len(r) - 1 - db
        r = [upoly.mul(QQ, a, lc) for a in r]
        for j in range(db + 1):
            r[k + j] = upoly.sub(QQ, r[k + j], upoly.mul(QQ, c, B[j]))
        r = _y_strip(r)
        e -= 1
    if e > 0:
        f = _qx_pow(lc, e)
        r = [upoly.mul(QQ, a, f) for a in r]
    return r


def _y_div_scalar(P, c):
    return [_qx_div(a, c) for a in P]


def _content(P):
    g = []
    for a in P:
        g = upoly.gcd(QQ, g, a)
        if len(g) == 1:
            break
    return g


def resultant_rows(A, B):
    """Resultant in ``y`` of two ``Q[x][y]`` polynomials (subresultant algorithm)."""
    A, B = _y_strip(A), _y_strip(B)
    if not A or not B:
        return []
    da, db = len(A) - 1, len(B) - 1
    s = 1
    if da < db:
        A, B = B, A
        if da % 2 and db % 2:
            s = -s
    if len(B) == 1:
        return upoly.scale(QQ, _qx_pow(B[0], len(A) - 1), Fraction(s))
    g = _ONE
    h = _ONE
    while True:
        da, db = len(A) - 1, len(B) - 1
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        R = _y_prem(A, B)
        A = B
        if not R:
            return []
        B = _y_div_scalar(R, upoly.mul(QQ, g, _qx_pow(h, delta)))
        g = A[-1]
        if delta == 0:
            pass
        else:
            h = _qx_div(_qx_pow(g, delta), _qx_pow(h, delta - 1))
        if len(B) == 1:
            da = len(A) - 1
            h = _qx_div(_qx_pow(B[0], da), _qx_pow(h, da - 1)) if da >= 1 else _ONE
            return upoly.scale(QQ, h, Fraction(s))


def resultant_y(f: BivariatePolynomial, g: BivariatePolynomial) -> BivariatePolynomial:
    """Resultant of ``f`` and ``g`` with respect to ``y``, as a polynomial in ``x``."""
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of a zero polynomial")
    return BivariatePolynomial.from_x_poly(resultant_rows(f.as_y_poly(), g.as_y_poly()))


def _y_gcd_primitive(A, B):
    """Primitive gcd in ``Q[x][y]`` of two nonzero polynomials (subresultant PRS)."""
    if len(A) < len(B):
        A, B = B, A
    A = _y_div_scalar(A, _content(A))
    B = _y_div_scalar(B, _content(B))
    g = _ONE
    h = _ONE
    while True:
        if len(B) == 1:
            return [_ONE]
        delta = (len(A) - 1) - (len(B) - 1)
        R = _y_prem(A, B)
        if not R:
            return _y_div_scalar(B, _content(B))
        if len(R) == 1:
            return [_ONE]
        A, B = B, _y_div_scalar(R, upoly.mul(QQ, g, _qx_pow(h, delta)))
        g = A[-1]
        if delta:
            h = _qx_div(_qx_pow(g, delta), _qx_pow(h, delta - 1))


def normalize(f: BivariatePolynomial) -> BivariatePolynomial:
    """Scale so that the graded-lex (``y > x``) leading coefficient is 1."""
    if f.is_zero():
        return f
    _, c = f.leading_term()
    return f.scale(1 / c)


def gcd(f: BivariatePolynomial, g: BivariatePolynomial) -> BivariatePolynomial:
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd of two zero polynomials")
    if f.is_zero():
        return normalize(g)
    if g.is_zero():
        return normalize(f)
    A, B = f.as_y_poly(), g.as_y_poly()
    c = upoly.gcd(QQ, _content(A), _content(B))
    P = _y_gcd_primitive(A, B)
    return normalize(BivariatePolynomial.from_y_poly([upoly.mul(QQ, a, c) for a in P]))


def divide(f: BivariatePolynomial, g: BivariatePolynomial):
    """Division in ``Q[x][y]``: return ``(q, r)`` with ``f = q*g + r`` when exact.

    The quotient is computed by long division in ``y`` over ``Q(x)``; if some
    step is not exact in ``Q[x]`` the remainder returned is nonzero.
    """
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    A, B = f.as_y_poly(), g.as_y_poly()
    A = _y_strip(A)
    db = len(B) - 1
    quo = [[] for _ in range(max(len(A) - db, 0))]
    lc = B[-1]
    while A and len(A) - 1 >= db:
        q, r = upoly.divmod_(QQ, A[-1], lc)
        if r:
            return None, f
        k = len(A) - 1 - db
        quo[k] = q
        for j in range(db + 1):
            A[k + j] = upoly.sub(QQ, A[k + j], upoly.mul(QQ, q, B[j]))
        A = _y_strip(A)
    return BivariatePolynomial.from_y_poly(quo), BivariatePolynomial.from_y_poly(A)


def exact_quotient(f: BivariatePolynomial, g: BivariatePolynomial) -> BivariatePolynomial:
    q, r = divide(f, g)
    if q is None or not r.is_zero():
        raise ArithmeticError("inexact polynomial division")
    return q


def divides(g: BivariatePolynomial, f: BivariatePolynomial) -> bool:
    q, r = divide(f, g)
    return q is not None and r.is_zero()


def squarefree_part(f: BivariatePolynomial) -> BivariatePolynomial:
    """Product of the distinct irreducible factors of ``f``, normalized."""
    if f.is_zero():
        raise ValueError("squarefree part of zero")
    rows = f.as_y_poly()
    c = _content(rows)
    prim = BivariatePolynomial.from_y_poly([_qx_div(a, c) for a in rows])
    c_sqf = upoly.exact_div(QQ, c, upoly.gcd(QQ, c, upoly.derivative(QQ, c))) if len(c) > 1 else _ONE
    if prim.degree_y() > 0:
        prim = exact_quotient(prim, gcd(prim, prim.diff_y()))
    return normalize(prim * BivariatePolynomial.from_x_poly(c_sqf))


def multiplicity(g: BivariatePolynomial, f: BivariatePolynomial) -> int:
    """Largest ``k`` with ``g^k | f`` (``g`` nonconstant, ``f`` nonzero)."""
    k = 0
    while True:
        q, r = divide(f, g)
        if q is None or not r.is_zero():
            return k
        f = q
        k += 1


def squarefree_layers(f: BivariatePolynomial) -> list[BivariatePolynomial]:
    """``[s_1, s_2, ...]`` where ``s_i`` is the product of the factors of multiplicity ``>= i``."""
    layers = []
    while f.total_degree() > 0:
        s = squarefree_part(f)
        layers.append(s)
        f = exact_quotient(f, s)
    return layers


def coprime_basis(polys) -> list[BivariatePolynomial]:
    """Pairwise coprime squarefree polynomials whose products generate the same factors.

    Every irreducible factor of every input divides exactly one element of the
    returned list, and all factors of one element share their multiplicity in
    each input, so :func:`multiplicity` is meaningful on the result.  The
    order is deterministic given the input order.
    """
    basis: list[BivariatePolynomial] = []

    def insert(current: list, s: BivariatePolynomial) -> list:
        if s.total_degree() <= 0:
            return current
        for i, b in enumerate(current):
            g = gcd(b, s)
            if g.total_degree() > 0:
                rest = current[:i] + current[i + 1:]
                pieces = [normalize(exact_quotient(b, g)), g]
                out = insert(rest, normalize(exact_quotient(s, g)))
                for p in pieces:
                    if p.total_degree() > 0:
                        out.append(p)
                return out
        return current + [normalize(s)]

    for f in polys:
        if f.is_zero():
            continue
        for layer in squarefree_layers(f):
            basis = insert(basis, layer)
    return basis
