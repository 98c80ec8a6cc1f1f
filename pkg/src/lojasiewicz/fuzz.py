"""Seeded random corpora and the property suite run on each instance.

Every case draws from its own ``random.Random(f"{seed}:{index}")`` so a case
can be replayed alone and reports do not depend on worker scheduling.
"""

from __future__ import annotations

import itertools
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import (
    BivariatePolynomial,
    Split,
    TruncatedSeries,
    gcd,
    substitute,
)
from .intersect import (
    _axis_condition,
    i0_resultant,
    i0_via_branches,
    log_distance,
)
from .loj import (
    Codimension,
    IdealPresentation,
    LojError,
    PropertyViolation,
    analyze,
    check_finite_codimension,
    farey_decompose,
    l0,
    closest_branch_check,
    sample_lower_bound_check,
)
from .puiseux import Expansion, Parametrization, normalized_parametrization

PROBES_PER_CASE = 5
SAMPLES_PER_CASE = 50
EXTRA_SHEARS = 2
RETRY_FACTOR = 20
SHEAR_CHOICES = (Fraction(-2), Fraction(-1), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3))

X, Y = BivariatePolynomial.x(), BivariatePolynomial.y()


class CorpusError(RuntimeError):
    """The generator kept producing rejected samples."""


def case_rng(seed, index: int) -> random.Random:
    return random.Random(f"{seed}:{index}")


def _coeff(rng: random.Random, bound: int = 3) -> int:
    return rng.choice([c for c in range(-bound, bound + 1) if c])


def random_polynomial(rng: random.Random, max_degree: int, max_terms: int = 4) -> BivariatePolynomial:
    """Nonzero polynomial without constant term and total degree at most ``max_degree``."""
    monomials = [(a, b) for a in range(max_degree + 1) for b in range(max_degree + 1 - a) if a + b]
    picks = rng.sample(monomials, rng.randint(1, min(max_terms, len(monomials))))
    p = BivariatePolynomial.constant(0)
    for a, b in sorted(picks):
        p = p + BivariatePolynomial.monomial(a, b, _coeff(rng))
    return p


def random_ideal(rng: random.Random, max_degree: int, attempts: int) -> tuple:
    """Draw 2 or 3 generators until the ideal has finite codimension.

    Returns ``(ideal, draws_used)``; raises :class:`CorpusError` after ``attempts``.
    """
    for used in range(1, attempts + 1):
        n = rng.choice((2, 3))
        gens = tuple(random_polynomial(rng, max_degree) for _ in range(n))
        I = IdealPresentation(gens)
        if check_finite_codimension(I) is Codimension.FINITE:
            return I, used
    raise CorpusError(f"no finite-codimension ideal in {attempts} draws")


def corpus(count: int, max_degree: int, seed) -> list:
    """``count`` seeded ideals; the total number of rejected draws is capped at 20 per case."""
    budget = RETRY_FACTOR * count
    out = []
    for i in range(count):
        I, used = random_ideal(case_rng(seed, i), max_degree, budget)
        budget -= used - 1
        out.append(I)
    return out


def random_probe(rng: random.Random) -> BivariatePolynomial:
    """A curve through the origin, typically irreducible: smooth or a cusp-like germ."""
    kind = rng.randrange(3)
    if kind == 0:
        k = rng.randint(1, 4)
        return Y - _coeff(rng) * X ** k - _coeff(rng) * X ** (k + 1)
    if kind == 1:
        a = rng.choice((2, 3))
        b = rng.choice([b for b in range(a + 1, a + 5) if b % a])
        return Y ** a - _coeff(rng) * X ** b + _coeff(rng) * X ** (b + 1)
    return X - _coeff(rng) * Y ** rng.randint(1, 3)


def _poly_series(coeffs: dict, precision: int) -> TruncatedSeries:
    dense = [Fraction(coeffs.get(i, 0)) for i in range(precision)]
    return TruncatedSeries.from_rationals(dense, precision)


def random_parametrizations(rng: random.Random, analysis, count: int) -> list:
    """Pairs ``(ideal, phi)`` mixing random polynomial arcs with perturbed branches.

    Components are polynomials in ``t`` and the precision exceeds the degree
    of every composite, so orders along ``phi`` are exact.
    """
    I0, J = analysis.original, analysis.ideal
    deg = max(g.total_degree() for g in I0.nonzero)
    rational = [c for c in analysis.classes if c.d == 1]
    out = []
    while len(out) < count:
        if rational and len(out) % 2:
            c = rng.choice(rational)
            k = rng.randint(c.e, c.e + 10)
            S = normalized_parametrization(c, k + 1).phi2
            ys = {i: S.coefficient(i) for i in range(k)}
            ys[k] = ys.get(k, 0) + rng.choice((0, _coeff(rng)))
            xs = {c.e: c.x_coeff}
            ideal = J
        else:
            xs = {rng.randint(1, 4): _coeff(rng) for _ in range(rng.randint(0, 2))}
            ys = {rng.randint(1, 4): _coeff(rng) for _ in range(rng.randint(0, 2))}
            ideal = I0
        xs = {i: v for i, v in xs.items() if v}
        ys = {i: v for i, v in ys.items() if v}
        if not xs and not ys:
            continue
        top = max(itertools.chain(xs, ys))
        prec = deg * top + 1
        out.append((ideal, Parametrization(_poly_series(xs, prec), _poly_series(ys, prec))))
    return out


def random_combination(rng: random.Random, gens) -> BivariatePolynomial:
    multipliers = (BivariatePolynomial.constant(1), X, Y, X + Y)
    h = BivariatePolynomial.constant(0)
    for g in gens:
        h = h + rng.choice(multipliers).scale(_coeff(rng)) * g
    return h


@dataclass
class CaseReport:
    index: int
    generators: tuple
    value: Fraction | None = None
    farey: str = ""
    classes: int = 0
    checks: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    error: str | None = None

    @property
    def ok(self) -> bool:
        return not self.violations and self.error is None

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "generators": [str(g) for g in self.generators],
            "value": None if self.value is None else str(self.value),
            "farey": self.farey,
            "classes": self.classes,
            "checks": self.checks,
            "violations": self.violations,
            "error": self.error,
        }

    def line(self) -> str:
        gens = ", ".join(str(g) for g in self.generators)
        status = "ok" if self.ok else ("ERROR " + self.error if self.error else "VIOLATION " + "; ".join(self.violations))
        return f"case {self.index}: ({gens}) value={self.value} farey={self.farey} classes={self.classes} {status}"


def _ultrametric_failures(classes) -> int:
    bad = 0
    for c1, c2, c3 in itertools.permutations(classes, 3):
        if c1.class_id > c2.class_id:
            continue
        d12, d13, d23 = log_distance(c1, c2), log_distance(c1, c3), log_distance(c2, c3)
        if d12 < min(d13, d23):
            bad += 1
    return bad


def _puiseux_failures(expansion: Expansion) -> int:
    bad = 0
    for j, F in enumerate(expansion.factors):
        classes = [c for c in expansion.classes if c.source == j]
        if sum(c.e * c.d for c in classes) != F.y_axis_order():
            bad += 1
        for c in classes:
            phi = normalized_parametrization(c, c.precision)
            if isinstance(substitute(F, phi).order(), int):
                bad += 1
    return bad


def _run_properties(I: IdealPresentation, rng: random.Random, report: CaseReport, hints: dict):
    probes = [random_probe(rng) for _ in range(PROBES_PER_CASE)]
    samples_rng = random.Random(rng.random())
    shears = [rng.choice(SHEAR_CHOICES) for _ in range(EXTRA_SHEARS)]
    perm = list(range(len(I.generators)))
    rng.shuffle(perm)
    extra = random_combination(rng, I.generators)

    base = analyze(I, hints=hints or None)
    cert = base.certificate
    report.value, report.farey, report.classes = cert.value, str(cert.farey), len(cert.rows)

    def check(name, ok, detail=""):
        report.checks[name] = bool(ok)
        if not ok:
            report.violations.append(f"{name}{': ' + detail if detail else ''}")

    check("farey", farey_decompose(cert.value).valid, str(cert.value))
    check("attainment", cert.value == max(r.exponent for r in cert.rows))
    check("order_bound", cert.value >= min(g.order() for g in I.nonzero))

    joint = analyze(I, probes=probes, hints=hints or None)
    hints.update(joint.expansion.hints)
    check("ultrametric", _ultrametric_failures(joint.classes + joint.probe_classes) == 0)
    check("puiseux", _puiseux_failures(joint.expansion) == 0)
    hs = joint.classes
    check("closest_branch", all(closest_branch_check(joint.ideal, g, hs) for g in joint.probe_classes))

    samples = random_parametrizations(samples_rng, base, SAMPLES_PER_CASE)
    check("lower_bound", all(sample_lower_bound_check(J, cert, phi) for J, phi in samples))

    for i, lam in enumerate(shears):
        v = l0(I.sheared(lam)).value
        check(f"shear {i} by {lam}", v == cert.value, f"{v} != {cert.value}")
    v = l0(IdealPresentation(tuple(I.generators[k] for k in perm))).value
    check("permutation", v == cert.value, f"{v} != {cert.value}")
    v = l0(IdealPresentation(I.generators + (extra,))).value
    check("appended", v == cert.value, f"{v} != {cert.value}")


def run_case(args) -> CaseReport:
    """Property suite for one corpus entry; ``args = (index, ideal, seed)``."""
    index, I, seed = args
    hints: dict = {}
    for _ in range(50):
        report = CaseReport(index, I.generators)
        rng = random.Random(f"{seed}:{index}:properties")
        try:
            _run_properties(I, rng, report, hints)
            return report
        except Split as s:
            hints[s.ring.key] = s.factors
        except PropertyViolation as exc:
            report.violations.append(f"structure: {exc}")
            return report
        except (LojError, ArithmeticError, ValueError) as exc:
            report.error = f"{type(exc).__name__}: {exc}"
            return report
    report.error = "residue rings kept splitting"
    return report


def run_fuzz(count: int, max_degree: int, seed, jobs: int = 1) -> list:
    ideals = corpus(count, max_degree, seed)
    tasks = [(i, I, seed) for i, I in enumerate(ideals)]
    if jobs <= 1:
        return [run_case(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run_case, tasks, chunksize=1))


def format_report(reports, as_json: bool = False) -> str:
    failed = sum(not r.ok for r in reports)
    if as_json:
        return json.dumps({"cases": [r.to_dict() for r in reports], "failed": failed}, indent=2)
    lines = [r.line() for r in reports]
    lines.append(f"{len(reports) - failed}/{len(reports)} cases passed")
    return "\n".join(lines)


# ----------------------------------------------------------------------
# resultant versus parametrization


def random_oracle_pair(rng: random.Random, max_degree: int = 4, attempts: int = 200) -> tuple:
    """A coprime pair of y-regular curves through the origin meeting ``x = 0`` only there.

    ``g`` is squarefree so its branch classes can be expanded directly.
    """
    from .algebra import normalize, squarefree_part

    for _ in range(attempts):
        f = random_polynomial(rng, max_degree)
        g = random_polynomial(rng, max_degree)
        if f.total_degree() < 1 or not f.is_y_regular() or not g.is_y_regular():
            continue
        if squarefree_part(g) != normalize(g):
            continue
        if gcd(f, g).total_degree() > 0 or not _axis_condition(f, g):
            continue
        return f, g
    raise CorpusError("no admissible oracle pair")


def oracle_values(f: BivariatePolynomial, g: BivariatePolynomial) -> tuple:
    """``(sum over branch classes of g, resultant order)`` for the pair."""
    return i0_via_branches(f, g), i0_resultant(f, g)
