"""Dense univariate polynomials over a coefficient ring.

A polynomial is a list ``[c0, c1, ..., cn]`` of ring elements, lowest degree
first, with no trailing zeros; ``[]`` is the zero polynomial.  Every function
takes the coefficient ring explicitly so the same code serves the rationals
and the residue rings built on top of them.
"""

from __future__ import annotations


def strip(R, p):
    p = list(p)
    while p and R.is_zero(p[-1]):
        p.pop()
    return p


def degree(p) -> int:
    return len(p) - 1


def add(R, p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] = R.add(out[i], c)
    return strip(R, out)


def neg(R, p):
    return [R.neg(c) for c in p]


def sub(R, p, q):
    return add(R, p, neg(R, q))


def scale(R, p, c):
    return strip(R, [R.mul(a, c) for a in p])


def shift(R, p, k):
    """Multiply by the k-th power of the variable."""
    return [R.zero] * k + list(p) if p else []


def mul(R, p, q):
    if not p or not q:
        return []
    out = [R.zero] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if R.is_zero(a):
            continue
        for j, b in enumerate(q):
            out[i + j] = R.add(out[i + j], R.mul(a, b))
    return strip(R, out)


def power(R, p, n: int):
    out = [R.one]
    base = p
    while n:
        if n & 1:
            out = mul(R, out, base)
        n >>= 1
        if n:
            base = mul(R, base, base)
    return out


def derivative(R, p):
    return strip(R, [R.mul(R.from_int(i), c) for i, c in enumerate(p)][1:])


def evaluate(R, p, a):
    acc = R.zero
    for c in reversed(p):
        acc = R.add(R.mul(acc, a), c)
    return acc


def monic(R, p):
    if not p:
        return []
    inv = R.inv(p[-1])
    out = [R.mul(c, inv) for c in p[:-1]]
    return out + [R.one]


def divmod_(R, p, q):
    """Euclidean division; the leading coefficient of ``q`` must be a unit of ``R``."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    dq = len(q) - 1
    if len(r) <= dq:
        return [], strip(R, r)
    inv = R.inv(q[-1])
    quo = [R.zero] * (len(r) - dq)
    for k in range(len(r) - 1, dq - 1, -1):
        c = r[k]
        if R.is_zero(c):
            continue
        c = R.mul(c, inv)
        quo[k - dq] = c
        for j in range(dq + 1):
            r[k - dq + j] = R.sub(r[k - dq + j], R.mul(c, q[j]))
    return strip(R, quo), strip(R, r[:dq])


def rem(R, p, q):
    return divmod_(R, p, q)[1]


def exact_div(R, p, q):
    quo, r = divmod_(R, p, q)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return quo


def pseudo_rem(R, p, q):
    """Pseudo-remainder: ``lc(q)^(deg p - deg q + 1) * p mod q`` without inversions."""
    dq = len(q) - 1
    r = list(p)
    lc = q[-1]
    e = len(r) - 1 - dq + 1
    while r and len(r) - 1 >= dq:
        c = r[-1]
        k = len(r) - 1 - dq
        r = [R.mul(a, lc) for a in r]
        for j in range(dq + 1):
            r[k + j] = R.sub(r[k + j], R.mul(c, q[j]))
        r = strip(R, r)
        e -= 1
    if e > 0:
        f = R.one
        for _ in range(e):
            f = R.mul(f, lc)
        r = scale(R, r, f)
    return r


def gcd(R, p, q):
    """Monic gcd by the Euclidean algorithm.

    Over a product of fields, inverting a leading coefficient may raise
    :class:`~lojasiewicz.algebra.rings.Split`; that is the intended
    dynamic-evaluation behaviour.
    """
    p, q = strip(R, p), strip(R, q)
    while q:
        p, q = q, rem(R, p, q)
    return monic(R, p)


def xgcd(R, p, q):
    """Return ``(g, s, t)`` with ``s*p + t*q == g`` and ``g`` monic."""
    r0, r1 = strip(R, p), strip(R, q)
    s0, s1 = [R.one], []
    t0, t1 = [], [R.one]
    while r1:
        quo, r = divmod_(R, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(R, s0, mul(R, quo, s1))
        t0, t1 = t1, sub(R, t0, mul(R, quo, t1))
    if not r0:
        return [], [], []
    inv = R.inv(r0[-1])
    return scale(R, r0, inv), scale(R, s0, inv), scale(R, t0, inv)


def squarefree_decomposition(R, p):
    """Yun's algorithm: return ``[(a1, 1), (a2, 2), ...]`` with monic squarefree ``ai``.

    Factors equal to 1 are omitted.  Characteristic zero is assumed.
    """
    p = monic(R, strip(R, p))
    if len(p) <= 1:
        return []
    dp = derivative(R, p)
    a = gcd(R, p, dp)
    b = exact_div(R, p, a)
    c = exact_div(R, dp, a)
    d = sub(R, c, derivative(R, b))
    out = []
    i = 1
    while len(b) > 1:
        a = gcd(R, b, d)
        b = exact_div(R, b, a)
        c = exact_div(R, d, a)
        d = sub(R, c, derivative(R, b))
        if len(a) > 1:
            out.append((a, i))
        i += 1
    return out
