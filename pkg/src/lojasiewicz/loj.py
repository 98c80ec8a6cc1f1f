"""The Łojasiewicz exponent of an ideal of ``K[[x, y]]`` given by polynomial generators.

The exponent is the largest, over branches ``g`` of the product of the
generators, of ``min_k i0(f_k, g) / ord g``.  :func:`l0` computes it exactly
and returns a certificate with the per-branch table; the remaining functions
check properties of the result (Farey form, comparison with the closest branch, and
sampled lower bounds from arbitrary parametrizations).
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra import (
    INFINITE,
    BivariatePolynomial,
    Split,
    coprime_basis,
    divides,
    format_extended,
    gcd,
    multiplicity,
    resultant_y,
    substitute,
)
from .intersect import branch_order, log_distance
from .puiseux import BranchClass, Expansion, Parametrization

MAX_REFINEMENTS = 100


class LojError(ValueError):
    pass


class InfiniteCodimensionError(LojError):
    pass


class GenericityError(LojError):
    pass


class PropertyViolation(AssertionError):
    pass


class Codimension(enum.Enum):
    UNIT_IDEAL = "unit"
    FINITE = "finite"
    INFINITE = "infinite"


@dataclass(frozen=True)
class IdealPresentation:
    generators: tuple
    applied_shear: Fraction = Fraction(0)

    def __post_init__(self):
        gens = tuple(self.generators)
        if not gens or all(g.is_zero() for g in gens):
            raise LojError("an ideal needs a nonzero generator")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "applied_shear", Fraction(self.applied_shear))

    def sheared(self, lam) -> "IdealPresentation":
        lam = Fraction(lam)
        return IdealPresentation(tuple(g.shear(lam) for g in self.generators), self.applied_shear + lam)

    @property
    def nonzero(self) -> tuple:
        return tuple(g for g in self.generators if not g.is_zero())


def check_finite_codimension(I: IdealPresentation) -> Codimension:
    gens = I.nonzero
    if any(g.constant_term() for g in gens):
        return Codimension.UNIT_IDEAL
    h = gens[0]
    for g in gens[1:]:
        h = gcd(h, g)
    if h.total_degree() > 0 and not h.constant_term():
        return Codimension.INFINITE
    return Codimension.FINITE


# ----------------------------------------------------------------------
# Farey numbers


@dataclass(frozen=True)
class FareyForm:
    """``N`` (kind ``"integer"``) or ``N + b/a`` (kind ``"composite"``)."""

    kind: str
    N: int
    b: int = 0
    a: int = 1
    valid: bool = True

    @property
    def value(self) -> Fraction:
        return self.N + Fraction(self.b, self.a)

    def __str__(self):
        if self.kind == "integer":
            return f"{self.N} (integer)"
        return f"{self.N} + {self.b}/{self.a} ({'valid' if self.valid else 'INVALID'})"


def farey_decompose(q) -> FareyForm:
    """Split ``q >= 1`` as ``N + b/a``; valid iff ``q`` is an integer or ``0 < b < a < N``."""
    q = Fraction(q)
    if q < 1:
        raise ValueError("Farey decomposition needs q >= 1")
    N = q.numerator // q.denominator
    if q.denominator == 1:
        return FareyForm("integer", N)
    frac = q - N
    return FareyForm("composite", N, frac.numerator, frac.denominator, frac.denominator < N)


# ----------------------------------------------------------------------
# certificate


@dataclass(frozen=True)
class BranchRow:
    class_id: int
    e: int
    d: int
    ord: int
    mult: int
    i0: tuple
    exponent: Fraction


@dataclass(frozen=True)
class LojCertificate:
    value: Fraction
    farey: FareyForm
    rows: tuple
    attaining_class: int | None
    applied_shear: Fraction

    def to_dict(self) -> dict:
        f = self.farey
        return {
            "value": str(self.value),
            "farey": {"kind": f.kind, "N": f.N, "b": f.b, "a": f.a, "valid": f.valid},
            "shear": str(self.applied_shear),
            "classes": [
                {
                    "id": r.class_id, "e": r.e, "d": r.d, "ord": r.ord, "mult": r.mult,
                    "i0": [v if v is not INFINITE else "inf" for v in r.i0],
                    "exponent": str(r.exponent),
                }
                for r in self.rows
            ],
            "attaining": self.attaining_class,
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: dict) -> "LojCertificate":
        fd = data["farey"]
        rows = tuple(
            BranchRow(
                r["id"], r["e"], r["d"], r["ord"], r["mult"],
                tuple(INFINITE if v == "inf" else int(v) for v in r["i0"]),
                Fraction(r["exponent"]),
            )
            for r in data["classes"]
        )
        return cls(
            Fraction(data["value"]),
            FareyForm(fd["kind"], fd["N"], fd["b"], fd["a"], fd["valid"]),
            rows,
            data["attaining"],
            Fraction(data["shear"]),
        )

    @classmethod
    def from_json(cls, text: str) -> "LojCertificate":
        return cls.from_dict(json.loads(text))

    def format(self) -> str:
        lines = [
            f"value: {self.value}",
            f"farey: {self.farey}",
            f"shear: {self.applied_shear}",
            f"attaining class: {self.attaining_class}",
        ]
        if self.rows:
            lines.append("classes:")
            for r in self.rows:
                i0 = ", ".join(format_extended(v) for v in r.i0)
                lines.append(f"  [{r.class_id}] e={r.e} d={r.d} ord={r.ord} mult={r.mult} "
                             f"i0=({i0}) exponent={r.exponent}")
        return "\n".join(lines)


# ----------------------------------------------------------------------
# per-branch exponents


def l0_on_branch(I: IdealPresentation, c: BranchClass, i0_row: Sequence) -> Fraction:
    """``min_k i0(f_k, g) / ord g`` over the finite entries of the row."""
    finite = [v for v in i0_row if v is not INFINITE]
    if not finite:
        raise LojError("branch is common to every generator: the ideal has infinite codimension")
    return Fraction(min(finite), c.ord)


def _factor_of(c: BranchClass) -> BivariatePolynomial:
    return c.expansion.factors[c.source]


_RES_CACHE: dict = {}


def _res_order(f: BivariatePolynomial, h: BivariatePolynomial) -> int:
    key = (f, h)
    if key not in _RES_CACHE:
        if len(_RES_CACHE) > 4096:
            _RES_CACHE.clear()
        _RES_CACHE[key] = resultant_y(f, h).order()
    return _RES_CACHE[key]


def i0_row(I: IdealPresentation, c: BranchClass) -> tuple:
    """Intersection numbers of every generator with a branch of ``c``.

    A generator divisible by the factor carrying ``c`` gives INFINITE exactly.
    Otherwise the order along the branch is searched with precision capped
    by ``e * ord_x Res_y(f, factor)``, which bounds it; reaching the cap is an
    internal error.  May raise ``Split``.
    """
    h = _factor_of(c)
    row = []
    for f in I.generators:
        if f.is_zero() or divides(h, f):
            row.append(INFINITE)
            continue
        cap = c.e * _res_order(f, h)
        k = branch_order(f, c, cap)
        if k is INFINITE:
            raise LojError(f"order of {f} along a branch exceeded its certified bound {cap}")
        row.append(k)
    return tuple(row)


# ----------------------------------------------------------------------
# the driver


def find_shear(polys: Sequence[BivariatePolynomial]) -> Fraction:
    """Smallest ``lam`` in 0, 1, 2, ... making every polynomial y-regular."""
    total = sum(p.order() for p in polys)
    for lam in range(total + 1):
        if all(p.shear(lam).is_y_regular() for p in polys):
            return Fraction(lam)
    raise GenericityError(f"no y-regular shear among {total + 1} candidates")


@dataclass
class LojAnalysis:
    """Everything computed on the way to the certificate, kept for verification."""

    ideal: IdealPresentation
    original: IdealPresentation
    expansion: Expansion | None
    classes: list = field(default_factory=list)
    probe_classes: list = field(default_factory=list)
    rows: dict = field(default_factory=dict)
    certificate: LojCertificate | None = None


def _basis_data(I: IdealPresentation, probes):
    gens = I.nonzero
    basis = [b for b in coprime_basis(list(gens) + list(probes)) if not b.constant_term()]
    masks, mults, is_gen, is_probe = [], [], [], []
    for b in basis:
        mask = frozenset(k for k, f in enumerate(I.generators) if not f.is_zero() and divides(b, f))
        masks.append(mask)
        mults.append(sum(multiplicity(b, I.generators[k]) for k in mask))
        is_gen.append(bool(mask))
        is_probe.append(any(divides(b, p) for p in probes))
    return basis, masks, mults, is_gen, is_probe


def analyze(I: IdealPresentation, probes: Sequence[BivariatePolynomial] = (), hints=None) -> LojAnalysis:
    """Run the full pipeline; ``probes`` are extra curves expanded in the same tree."""
    codim = check_finite_codimension(I)
    if codim is Codimension.INFINITE:
        raise InfiniteCodimensionError("generators share a branch through the origin")
    if codim is Codimension.UNIT_IDEAL:
        cert = LojCertificate(Fraction(0), FareyForm("integer", 0), (), None, I.applied_shear)
        return LojAnalysis(I, I, None, certificate=cert)
    lam = find_shear(list(I.nonzero) + [p for p in probes if not p.constant_term()])
    J = I.sheared(lam)
    sheared_probes = [p.shear(lam) for p in probes]
    basis, masks, mults, is_gen, is_probe = _basis_data(J, sheared_probes)
    expansion = Expansion(basis, hints=hints)
    for _ in range(MAX_REFINEMENTS):
        try:
            classes = [c.with_sources(masks[c.source], mults[c.source]) for c in expansion.classes]
            rows = {c.class_id: i0_row(J, c) for c in classes}
            break
        except Split as s:
            expansion = expansion.refined(s)
    else:
        raise LojError("residue rings kept splitting")
    gen_classes = [c for c in classes if is_gen[c.source]]
    probe_classes = [c for c in classes if is_probe[c.source]]
    table = []
    for c in gen_classes:
        if c.ord != c.e:
            raise PropertyViolation(f"class {c.class_id} is tangent to x = 0 after the shear")
        row = rows[c.class_id]
        table.append(BranchRow(c.class_id, c.e, c.d, c.ord, c.mult, row, l0_on_branch(J, c, row)))
    value = max(r.exponent for r in table)
    attaining = min(r.class_id for r in table if r.exponent == value)
    farey = farey_decompose(value)
    if not farey.valid:
        raise PropertyViolation(f"exponent {value} is not a Farey number")
    cert = LojCertificate(value, farey, tuple(table), attaining, J.applied_shear)
    return LojAnalysis(J, I, expansion, gen_classes, probe_classes, rows, cert)


def l0(I: IdealPresentation) -> LojCertificate:
    """Łojasiewicz exponent of a finite-codimension ideal, with its certificate."""
    return analyze(I).certificate


def lojasiewicz_exponent(*generators: BivariatePolynomial) -> Fraction:
    return l0(IdealPresentation(tuple(generators))).value


# ----------------------------------------------------------------------
# property checks


def closest_branch_check(I: IdealPresentation, g: BranchClass, hs: Sequence[BranchClass]) -> bool:
    """Is the exponent along ``g`` at most that along the ``h`` closest to ``g``?

    ``hs`` are the classes of the product of the generators; the closest one
    maximizes the logarithmic distance to ``g`` (lowest index on ties).
    """
    if not hs:
        raise ValueError("no branches to compare with")
    dists = [log_distance(g, h) for h in hs]
    best = max(dists)
    k = dists.index(best)
    return l0_on_branch(I, g, i0_row(I, g)) <= l0_on_branch(I, hs[k], i0_row(I, hs[k]))


def sample_lower_bound_check(I: IdealPresentation, cert: LojCertificate, phi: Parametrization) -> bool:
    """Does ``min_k ord(f_k o phi) / ord phi`` stay at or below the certified value?

    Generators vanishing on ``phi`` to its precision are left out of the
    minimum, which is exact as soon as one generator is nonzero below it.
    """
    orders = []
    for f in I.generators:
        if f.is_zero():
            continue
        k = substitute(f, phi).order()
        if isinstance(k, int):
            orders.append(k)
    if not orders:
        raise LojError("every generator vanishes on the parametrization to its precision")
    return Fraction(min(orders), phi.ord) <= cert.value
