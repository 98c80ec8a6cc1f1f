"""Rational Newton-Puiseux expansion of plane curve germs at the origin.

Branches are produced one conjugacy class at a time.  Each class lives over a
residue ring ``R`` (a tower of extensions of the rationals) and is
parametrized as ``x = lam * t^e``, ``y = S(t)`` using Duval's rational
transformations ``x = xi^v X^q``, ``y = X^m (xi^u + Y)`` with ``u*q - v*m = 1``,
which never adjoin ``q``-th roots.  Because moduli are only known to be
squarefree, ``R`` may be a product of fields; zero divisors met along the way
raise :class:`~lojasiewicz.algebra.Split` and the whole expansion is redone
with the discovered factorization as a hint.

Every class remembers its path through the expansion tree.  Two classes that
share a prefix share the corresponding residue rings, which fixes a
consistent choice of representatives and lets intersection numbers between
classes be read off the tree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .algebra import (
    INFINITE,
    QQ,
    BivariatePolynomial,
    ExtensionRing,
    Split,
    TruncatedSeries,
    normalize,
    squarefree_part,
)
from .algebra import upoly
from .algebra.series import inverse_trunc, mul_trunc
from .newton import _chain

MAX_RESTARTS = 200


class ExpansionError(ValueError):
    pass


@dataclass(frozen=True)
class Step:
    """One edge of the expansion tree: a Newton polygon face and a root of its polynomial.

    ``slope`` is INFINITE for the terminal step that selects the branch ``Y = 0``.
    """

    slope: object
    q: int
    m: int
    key: tuple


@dataclass
class _Chart:
    q: int
    m: int
    ring: object
    xcoef: object
    ycoef: object


class _Leaf:
    """A branch of a chart polynomial with a simple root at the origin (or ``Y = 0``)."""

    def __init__(self, source, ring, charts, poly, terminal_zero):
        self.source = source
        self.ring = ring
        self.charts = charts
        self.poly = poly  # dict over ring; None for a terminal Y = 0 branch
        self.terminal_zero = terminal_zero
        self._y: list = []
        self._y_prec = 1 if not terminal_zero else None
        self._cache: dict[int, tuple] = {}
        e = 1
        lam = ring.one
        offset = 0
        for ch in reversed(charts):
            offset += e * ch.m
            lam = ring.mul(ring.lift(ch.xcoef, ch.ring), _rpow(ring, lam, ch.q))
            e *= ch.q
        self.e = e
        self.lam = lam
        self.offset = offset
        if poly is not None:
            self._rows = _rows_in_y(ring, poly)

    # Newton iteration for the simple root -----------------------------

    def _lift_to(self, prec: int):
        R = self.ring
        rows = self._rows
        drows = [[R.mul(R.from_int(b), c) for c in row] for b, row in enumerate(rows)][1:]
        while self._y_prec < prec:
            p = min(2 * self._y_prec, prec)
            val = _eval_rows(R, rows, self._y, p)
            if val:
                der = _eval_rows(R, drows, self._y, p)
                corr = mul_trunc(R, val, inverse_trunc(R, der, p), p)
                y = list(self._y) + [R.zero] * (p - len(self._y))
                for k, c in enumerate(corr):
                    y[k] = R.sub(y[k], c)
                self._y = upoly.strip(R, y)
            self._y_prec = p

    def series(self, prec: int) -> TruncatedSeries:
        """``S(t)`` modulo ``t^prec``."""
        if prec in self._cache:
            return self._cache[prec]
        R = self.ring
        if self.terminal_zero:
            y, yprec = [], prec
        else:
            need = max(prec - self.offset, 1)
            self._lift_to(need)
            y, yprec = list(self._y[:need]), need
        c, E = R.one, 1
        for ch in reversed(self.charts):
            ycoef = R.lift(ch.ycoef, ch.ring)
            head = [ycoef] + [R.zero] * max(len(y) - 1, 0)
            body = list(y) if y else []
            body = body + [R.zero] * (len(head) - len(body))
            body[0] = R.add(body[0], ycoef) if len(y) else ycoef
            cm = _rpow(R, c, ch.m)
            shift = E * ch.m
            y = [R.zero] * shift + [R.mul(cm, v) for v in body]
            yprec = yprec + shift
            c = R.mul(R.lift(ch.xcoef, ch.ring), _rpow(R, c, ch.q))
            E *= ch.q
        y = y[:prec]
        out = TruncatedSeries(tuple(upoly.strip(R, y)), prec, R)
        self._cache[prec] = out
        return out


def _rpow(R, a, n):
    out = R.one
    while n:
        if n & 1:
            out = R.mul(out, a)
        a = R.mul(a, a)
        n >>= 1
    return out


def _rows_in_y(R, poly):
    dy = max(b for _, b in poly)
    rows = [[] for _ in range(dy + 1)]
    for (a, b), c in poly.items():
        row = rows[b]
        if len(row) <= a:
            row.extend([R.zero] * (a + 1 - len(row)))
        row[a] = c
    return rows


def _eval_rows(R, rows, y, prec):
    acc: list = []
    for row in reversed(rows):
        acc = mul_trunc(R, acc, y, prec)
        r = row[:prec]
        if len(acc) < len(r):
            acc = acc + [R.zero] * (len(r) - len(acc))
        for k, c in enumerate(r):
            acc[k] = R.add(acc[k], c)
    return upoly.strip(R, acc)


# ----------------------------------------------------------------------
# the expansion tree


def _lift_poly(poly, R_to, R_from):
    if R_to == R_from:
        return poly
    return {k: R_to.lift(c, R_from) for k, c in poly.items()}


def _transform(R, poly, q, m, xcoef, ycoef):
    """``poly(xcoef X^q, X^m (ycoef + Y)) / X^L`` with ``L`` the minimal weight."""
    L = min(q * a + m * b for a, b in poly)
    max_a = max(a for a, _ in poly)
    max_b = max(b for _, b in poly)
    xp = [R.one]
    for _ in range(max_a):
        xp.append(R.mul(xp[-1], xcoef))
    yp = [R.one]
    for _ in range(max_b):
        yp.append(R.mul(yp[-1], ycoef))
    out: dict = {}
    for (a, b), c in poly.items():
        base = R.mul(c, xp[a])
        ex = q * a + m * b - L
        for i in range(b + 1):
            term = R.mul(R.mul(base, yp[b - i]), R.from_int(comb(b, i)))
            key = (ex, i)
            out[key] = R.add(out[key], term) if key in out else term
    return {k: v for k, v in out.items() if not R.is_zero(v)}


def _y_order_at_origin(R, poly):
    """Order of ``poly(0, Y)``; the first nonzero coefficient must be a unit."""
    bs = sorted(b for a, b in poly if a == 0)
    for b in bs:
        c = poly[(0, b)]
        if not R.is_zero(c):
            R.inv(c)
            return b
    return INFINITE


def _rational_roots(p):
    """Rational roots of a squarefree rational polynomial (lowest degree first)."""
    from math import gcd as igcd

    den = 1
    for c in p:
        den = den * c.denominator // igcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    while ints and ints[0] == 0:
        ints = ints[1:]
    if len(ints) <= 1:
        return []
    a0, an = abs(ints[0]), abs(ints[-1])

    def divisors(n):
        out = []
        i = 1
        while i * i <= n:
            if n % i == 0:
                out.append(i)
                out.append(n // i)
            i += 1
        return set(out)

    roots = set()
    for num in divisors(a0):
        for d in divisors(an):
            for s in (1, -1):
                r = Fraction(s * num, d)
                if upoly.evaluate(QQ, p, r) == 0:
                    roots.add(r)
    return sorted(roots)


def _coprime_refine(R, polys):
    basis: list = []

    def insert(cur, s):
        if len(s) <= 1:
            return cur
        for i, b in enumerate(cur):
            g = upoly.gcd(R, b, s)
            if len(g) > 1:
                rest = cur[:i] + cur[i + 1:]
                out = insert(rest, upoly.exact_div(R, s, g))
                for piece in (upoly.exact_div(R, b, g), g):
                    if len(piece) > 1:
                        out.append(upoly.monic(R, piece))
                return out
        return cur + [upoly.monic(R, s)]

    for p in polys:
        basis = insert(basis, p)
    return basis


class _Builder:
    def __init__(self, hints):
        self.hints = hints
        self.leaves: list[tuple[tuple, _Leaf]] = []

    def split_by_hints(self, R, g):
        key = (R.key, tuple(g))
        if key in self.hints:
            out = []
            for h in self.hints[key]:
                out.extend(self.split_by_hints(R, list(h)))
            return out
        return [g]

    def roots(self, R, g):
        """Factor the monic squarefree ``g`` into the moduli used for children."""
        pieces = []
        if R is QQ and len(g) > 2:
            rest = g
            for r in _rational_roots(g):
                lin = [-r, Fraction(1)]
                pieces.append(lin)
                rest = upoly.exact_div(QQ, rest, lin)
            if len(rest) > 1:
                pieces.append(rest)
        else:
            pieces.append(g)
        out = []
        for p in pieces:
            out.extend(self.split_by_hints(R, p))
        return out

    def node(self, R, factors, charts, path):
        """Expand the branches through the origin of ``prod(factors)`` in the current chart.

        ``factors`` is a list of ``(source, poly)``; each ``poly`` vanishes at the
        origin with ``poly(0, Y)`` of positive order.
        """
        faces: dict[Fraction, list] = {}
        terminal = None
        for src, poly in factors:
            pts = list(poly)
            chain = _chain(pts)
            for v in chain:
                R.inv(poly[v])
            if chain[-1][1] > 1:
                raise ExpansionError("polynomial is not squarefree")
            if chain[-1][1] == 1:
                terminal = (path + (Step(INFINITE, 1, 0, ("zero",)),), _Leaf(src, R, charts, None, True))
            for (a1, b1), (a2, b2) in zip(chain, chain[1:], strict=False):
                faces.setdefault(Fraction(a2 - a1, b1 - b2), [])
        for slope in sorted(faces):
            m, q = slope.numerator, slope.denominator
            edge_polys = []
            for _src, poly in factors:
                L = min(q * a + m * b for a, b in poly)
                face = [(a, b) for a, b in poly if q * a + m * b == L]
                if len(face) < 2:
                    continue
                b_low = min(b for _, b in face)
                deg = (max(b for _, b in face) - b_low) // q
                psi = [R.zero] * (deg + 1)
                for a, b in face:
                    psi[(b - b_low) // q] = poly[(a, b)]
                for part, _ in upoly.squarefree_decomposition(R, psi):
                    edge_polys.append(part)
            children = []
            for g in _coprime_refine(R, edge_polys):
                for h in self.roots(R, g):
                    children.append(h)
            children.sort(key=lambda h: (len(h), tuple(R.sort_key(c) for c in h)))
            u = next(k for k in range(1, m + 1) if (k * q - 1) % m == 0)
            v = (u * q - 1) // m
            for h in children:
                if len(h) == 2:
                    R2, xi = R, R.neg(h[0])
                else:
                    R2 = ExtensionRing(R, tuple(h))
                    xi = R2.gen()
                chart = _Chart(q, m, R2, _rpow(R2, xi, v), _rpow(R2, xi, u))
                sub = []
                for src, poly in factors:
                    new = _transform(R2, _lift_poly(poly, R2, R), q, m, chart.xcoef, chart.ycoef)
                    k = _y_order_at_origin(R2, new)
                    if k is INFINITE:
                        raise ExpansionError("chart polynomial vanishes on the axis")
                    if k >= 1:
                        sub.append((src, new, k))
                step = Step(slope, q, m, (len(h) - 1, tuple(R.sort_key(c) for c in h)))
                total = sum(k for _, _, k in sub)
                if total == 0:
                    raise ExpansionError("edge root with no branch")
                if total == 1:
                    src, new, _ = sub[0]
                    self.leaves.append((path + (step,), _Leaf(src, R2, charts + [chart], new, False)))
                else:
                    self.node(R2, [(s, p) for s, p, _ in sub], charts + [chart], path + (step,))
        if terminal is not None:
            self.leaves.append(terminal)


def _expand(factors, hints):
    builder = _Builder(hints)
    root = []
    for i, f in enumerate(factors):
        if f.constant_term():
            continue
        if f.y_axis_order() is INFINITE:
            raise ExpansionError("polynomial is divisible by x")
        root.append((i, dict(f.support)))
    if root:
        builder.node(QQ, root, [], ())
    return builder.leaves


@dataclass(frozen=True, eq=False)
class BranchClass:
    """One conjugacy class of branches: ``x = x_coeff * t^e``, ``y = S(t)``.

    The class stands for ``d`` branches, one for each root of the residue ring
    (``d`` is its degree over the rationals).  ``source`` indexes the input
    factor the branches belong to; ``source_mask`` and ``mult`` are filled in
    by callers that know which generators that factor divides.
    """

    class_id: int
    e: int
    d: int
    S: TruncatedSeries
    x_coeff: object
    ring: object
    source: int
    path: tuple
    source_mask: frozenset = frozenset()
    mult: int = 1
    expansion: "Expansion" = field(default=None, repr=False)
    _leaf: _Leaf = field(default=None, repr=False)

    @property
    def precision(self) -> int:
        return self.S.precision

    @property
    def ord(self) -> int:
        k = self.S.order(below=self.e)
        return self.e if not isinstance(k, int) else min(self.e, k)

    @property
    def modulus(self):
        return tuple(r.modulus for r in self.ring.tower())

    def with_precision(self, prec: int) -> "BranchClass":
        return BranchClass(self.class_id, self.e, self.d, self._leaf.series(prec), self.x_coeff,
                           self.ring, self.source, self.path, self.source_mask, self.mult,
                           self.expansion, self._leaf)

    def with_sources(self, mask, mult) -> "BranchClass":
        return BranchClass(self.class_id, self.e, self.d, self.S, self.x_coeff, self.ring,
                           self.source, self.path, frozenset(mask), mult, self.expansion, self._leaf)

    def x_series(self, prec: int) -> TruncatedSeries:
        return TruncatedSeries.monomial(self.ring, self.x_coeff, self.e, prec)

    def format(self) -> str:
        R = self.ring
        mod = "; ".join(r.format_modulus() for r in R.tower()) or "-"
        xs = "" if self.x_coeff == R.one else f", x={R.format(self.x_coeff)}*t^{self.e}"
        return f"e={self.e}, d={self.d}, modulus={mod}{xs}, S={self.S.format()}"

    def __str__(self):
        return self.format()


class Expansion:
    """Branch classes of a product of pairwise coprime squarefree polynomials.

    All classes of one expansion share a tree, so intersection numbers between
    them are well defined.  ``hints`` maps a ring key to a known factorization
    of its modulus; :meth:`refined` adds one after a :class:`Split`.
    """

    def __init__(self, factors, precision: int = 8, hints=None):
        self.factors = tuple(factors)
        self.hints = dict(hints or {})
        for _ in range(MAX_RESTARTS):
            try:
                leaves = _expand(self.factors, self.hints)
                break
            except Split as s:
                self.hints[s.ring.key] = s.factors
        else:
            raise ExpansionError("too many residue ring splittings")
        classes = []
        for i, (path, leaf) in enumerate(leaves):
            classes.append(BranchClass(
                class_id=i, e=leaf.e, d=leaf.ring.absolute_degree, S=leaf.series(precision),
                x_coeff=leaf.lam, ring=leaf.ring, source=leaf.source, path=path,
                expansion=self, _leaf=leaf,
            ))
        self.classes = classes

    def refined(self, split: Split, precision: int = 8) -> "Expansion":
        hints = dict(self.hints)
        hints[split.ring.key] = split.factors
        return Expansion(self.factors, precision, hints)

    def path_intersection(self, c1: BranchClass, c2: BranchClass):
        """Intersection number of the representative branches of two classes."""
        if c1.expansion is not self or c2.expansion is not self:
            raise ValueError("classes come from a different expansion")
        if c1.path == c2.path:
            return INFINITE
        n1, n2 = c1.e, c2.e
        total = Fraction(0)
        for s1, s2 in zip(c1.path, c2.path, strict=False):
            if s1 == s2:
                total += n1 * n2 * s1.slope
                n1 //= s1.q
                n2 //= s2.q
                continue
            if s1.slope == s2.slope:
                contact = s1.slope
            else:
                contact = min(s1.slope, s2.slope)
            total += n1 * n2 * contact
            break
        else:
            raise ExpansionError("one branch path is a prefix of another")
        if total.denominator != 1:
            raise ExpansionError("non-integral intersection number")
        return int(total)


@dataclass(frozen=True)
class Parametrization:
    phi1: TruncatedSeries
    phi2: TruncatedSeries

    def __post_init__(self):
        for s in (self.phi1, self.phi2):
            k = s.order()
            if isinstance(k, int) and k < 1:
                raise ValueError("parametrization must vanish at t = 0")
        if not isinstance(self.phi1.order(), int) and not isinstance(self.phi2.order(), int):
            raise ValueError("both components vanish to precision")

    @property
    def ord(self) -> int:
        ks = [k for k in (self.phi1.order(), self.phi2.order()) if isinstance(k, int)]
        return min(ks)

    def __iter__(self):
        return iter((self.phi1, self.phi2))

    def compose(self, tau: TruncatedSeries) -> "Parametrization":
        return Parametrization(self.phi1.compose(tau.lift(self.phi1.ring)),
                               self.phi2.compose(tau.lift(self.phi2.ring)))


def _validate_curve(F: BivariatePolynomial):
    if F.is_zero():
        raise ExpansionError("zero polynomial")
    if F.constant_term():
        raise ExpansionError("curve does not pass through the origin")
    if not F.is_y_regular():
        raise ExpansionError("polynomial is not y-regular")
    if squarefree_part(F) != normalize(F):
        raise ExpansionError("polynomial is not squarefree")


def branch_classes(F: BivariatePolynomial, t_precision: int) -> list[BranchClass]:
    """Branch conjugacy classes of a squarefree y-regular germ, ``S`` known mod ``t^t_precision``."""
    _validate_curve(F)
    return Expansion([F], precision=t_precision).classes


def normalized_parametrization(c: BranchClass, precision: int) -> Parametrization:
    if precision > c.precision:
        c = extend_precision(c, precision)
    return Parametrization(c.x_series(precision), c.S.truncate(precision))


def extend_precision(c: BranchClass, new_precision: int) -> BranchClass:
    if new_precision <= c.precision:
        raise ValueError("new precision must exceed the current one")
    return c.with_precision(new_precision)
