"""Command-line entry point: ``lojasiewicz {compute,branches,diagram,i0,fuzz}``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .algebra import BivariatePolynomial, Split, coprime_basis, format_extended
from .intersect import IntersectError, i0_resultant, i0_via_branches
from .loj import (
    GenericityError,
    IdealPresentation,
    InfiniteCodimensionError,
    LojError,
    PropertyViolation,
    find_shear,
    l0,
)
from .newton import diagram
from .parsing import InputDocument, ParseError
from .puiseux import Expansion, ExpansionError

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INFINITE = 3
EXIT_VIOLATION = 4
EXIT_FAILURE = 5


class _Failure(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read(path) -> tuple:
    try:
        doc = InputDocument.read(path)
    except OSError as exc:
        raise _Failure(EXIT_PARSE, f"cannot read {path}: {exc.strerror}") from None
    if not doc.polynomials:
        raise _Failure(EXIT_PARSE, f"{path}: no polynomial found")
    return doc.polynomials


def _product(polys) -> BivariatePolynomial:
    p = BivariatePolynomial.constant(1)
    for q in polys:
        p = p * q
    return p


def cmd_compute(path, as_json: bool = False) -> str:
    gens = _read(path)
    try:
        cert = l0(IdealPresentation(gens))
    except InfiniteCodimensionError as exc:
        raise _Failure(EXIT_INFINITE, f"infinite codimension: {exc}") from None
    return cert.to_json(indent=2) if as_json else cert.format()


def cmd_branches(path, precision: int = 8) -> str:
    polys = [p for p in _read(path) if not p.is_zero()]
    if not polys:
        raise _Failure(EXIT_FAILURE, "only zero polynomials given")
    through = [p for p in polys if not p.constant_term()]
    if not through:
        return "no branch passes through the origin"
    lam = find_shear(through)
    factors = [b for b in coprime_basis([p.shear(lam) for p in through]) if not b.constant_term()]
    expansion = Expansion(factors, precision=precision)
    lines = [f"shear: {lam}"]
    for j, F in enumerate(factors):
        lines.append(f"factor {j}: {F}")
        for c in expansion.classes:
            if c.source == j:
                lines.append(f"  [{c.class_id}] {c.format()}")
    return "\n".join(lines)


def cmd_diagram(path) -> str:
    return "\n".join(f"{p}: {diagram(p)}" for p in _read(path))


def cmd_i0(path_f, path_g) -> str:
    f, g = _product(_read(path_f)), _product(_read(path_g))
    try:
        by_resultant = i0_resultant(f, g)
        lam = find_shear([h for h in (f, g) if not h.is_zero()])
        by_branches = i0_via_branches(f.shear(lam), g.shear(lam))
    except IntersectError as exc:
        raise _Failure(EXIT_FAILURE, f"{type(exc).__name__}: {exc}") from None
    out = f"resultant: {format_extended(by_resultant)}\nbranches: {format_extended(by_branches)}"
    if by_resultant != by_branches:
        raise _Failure(EXIT_VIOLATION, out + "\noracles disagree")
    return out


def cmd_fuzz(count: int, max_degree: int, seed, as_json: bool = False, jobs: int = 1) -> tuple:
    from .fuzz import CorpusError, format_report, run_fuzz

    if count < 1 or max_degree < 1:
        raise _Failure(EXIT_FAILURE, "count and max degree must be positive")
    try:
        reports = run_fuzz(count, max_degree, seed, jobs)
    except CorpusError as exc:
        raise _Failure(EXIT_FAILURE, str(exc)) from None
    text = format_report(reports, as_json)
    if any(r.violations for r in reports):
        return text, EXIT_VIOLATION
    if any(r.error for r in reports):
        return text, EXIT_FAILURE
    return text, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lojasiewicz",
        description="Exact Łojasiewicz exponents of ideals in two-variable power series rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="exponent and certificate of the ideal in FILE")
    p.add_argument("file", type=Path)
    p.add_argument("--json", action="store_true", help="emit the certificate as JSON")

    p = sub.add_parser("branches", help="branch classes of the curves in FILE")
    p.add_argument("file", type=Path)
    p.add_argument("--precision", type=int, default=8, help="number of series terms (default 8)")

    p = sub.add_parser("diagram", help="Newton diagram of each polynomial in FILE")
    p.add_argument("file", type=Path)

    p = sub.add_parser("i0", help="intersection number at the origin, by both oracles")
    p.add_argument("file1", type=Path)
    p.add_argument("file2", type=Path)

    p = sub.add_parser("fuzz", help="run the property suite on a seeded random corpus")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--seed", required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    code = EXIT_OK
    try:
        if args.command == "compute":
            out = cmd_compute(args.file, args.json)
        elif args.command == "branches":
            if args.precision < 1:
                raise _Failure(EXIT_FAILURE, "precision must be positive")
            out = cmd_branches(args.file, args.precision)
        elif args.command == "diagram":
            out = cmd_diagram(args.file)
        elif args.command == "i0":
            out = cmd_i0(args.file1, args.file2)
        else:
            out, code = cmd_fuzz(args.count, args.max_degree, args.seed, args.json, args.jobs)
    except _Failure as exc:
        print(exc, file=sys.stderr)
        return exc.code
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PropertyViolation as exc:
        print(f"property violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (GenericityError, LojError, ExpansionError, IntersectError, Split) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
