"""Command-line surface: construct, verify, interp, kernel, search.

Exit codes: 0 success (covered, match, certificate holds), 1 semantic
negative (uncovered, mismatch, no cover found), 2 usage or parse failure,
3 validation failure, 4 precondition violation.

Plane files are JSON lines, one object per plane: {"a": [...], "b": ...}.
Polynomial files are a single JSON object {"n", "k", "coeffs"} with 1-based,
strictly increasing index lists. Rationals are JSON integers or strings
"p/q" in lowest terms; floats are rejected to keep everything exact.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction
from typing import Sequence, TextIO

from .constructions import (
    balanced_even_cover,
    example_n6,
    level_set_cover,
    power_of_two_cover,
)
from .cube import CoverFamily, CoverReport, Hyperplane, verify_cover
from .errors import (
    BadModulus,
    BadSubsetSize,
    DegreeOutOfRange,
    DegreeTooHigh,
    DimensionMismatch,
    DimensionTooLarge,
    EmptyFamily,
    MTooLarge,
    OddDimension,
    OddModulus,
    ParseError,
    SkewcubeError,
    ZeroCoefficient,
)
from .fourier import MultilinearPoly, degree, inverse_wht, wht
from .interpolation import build_scheme, recover_coefficient
from .kernel import build_system, kernel_dim
from .search import SearchConfig, SearchStatus, min_cover_search
from .subsets import mask_of

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_VALIDATION = 3
EXIT_PRECONDITION = 4

_VALIDATION_ERRORS = (DimensionMismatch, DimensionTooLarge, EmptyFamily, ZeroCoefficient)
_PRECONDITION_ERRORS = (
    OddModulus,
    DegreeTooHigh,
    BadSubsetSize,
    BadModulus,
    DegreeOutOfRange,
)

_RATIONAL_RE = re.compile(r"^-?\d+(/[1-9]\d*)?$")


def _parse_rational(value, line: int | None = None) -> Fraction:
    if type(value) is int:
        return Fraction(value)
    if isinstance(value, str) and _RATIONAL_RE.match(value):
        return Fraction(value)
    raise ParseError(f"not an exact rational: {value!r}", line)


def _rational_json(q: Fraction):
    return int(q) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _open_input(path: str) -> TextIO:
    return sys.stdin if path == "-" else open(path, "r", encoding="utf-8")


def read_planes(stream: TextIO) -> CoverFamily:
    """Parse a JSON-lines plane file; errors name the offending line."""
    planes = []
    n = None
    for lineno, raw in enumerate(stream, start=1):
        text = raw.strip()
        if not text:
            continue
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"invalid JSON ({e.msg})", lineno) from None
        if not isinstance(obj, dict) or "a" not in obj or "b" not in obj:
            raise ParseError('expected an object with keys "a" and "b"', lineno)
        if not isinstance(obj["a"], list) or not obj["a"]:
            raise ParseError('"a" must be a nonempty list', lineno)
        a = tuple(_parse_rational(v, lineno) for v in obj["a"])
        b = _parse_rational(obj["b"], lineno)
        if n is None:
            n = len(a)
        elif len(a) != n:
            raise ParseError(f"dimension {len(a)} differs from earlier {n}", lineno)
        planes.append(Hyperplane(a, b))
    if not planes:
        raise ParseError("no planes in input")
    return CoverFamily(tuple(planes))


def write_planes(family: CoverFamily, stream: TextIO) -> None:
    for plane in family:
        stream.write(
            json.dumps(
                {"a": [_rational_json(c) for c in plane.a], "b": _rational_json(plane.b)},
                sort_keys=True,
            )
            + "\n"
        )


def read_poly(stream: TextIO) -> MultilinearPoly:
    text = stream.read()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON ({e.msg})") from None
    if not isinstance(obj, dict):
        raise ParseError("expected a JSON object")
    for key in ("n", "k", "coeffs"):
        if key not in obj:
            raise ParseError(f'missing key "{key}"')
    n, k = obj["n"], obj["k"]
    if type(n) is not int or type(k) is not int or n < 1 or k < 1:
        raise ParseError('"n" and "k" must be positive integers')
    coeffs: dict[int, tuple[Fraction, ...]] = {}
    for entry in obj["coeffs"]:
        if not isinstance(entry, dict) or "S" not in entry or "c" not in entry:
            raise ParseError('each coefficient needs keys "S" and "c"')
        S = entry["S"]
        if not isinstance(S, list) or any(type(i) is not int for i in S):
            raise ParseError('"S" must be a list of integers')
        if any(not 1 <= i <= n for i in S):
            raise ParseError(f'"S" indices must lie in 1..{n}: {S}')
        if any(S[i] >= S[i + 1] for i in range(len(S) - 1)):
            raise ParseError(f'"S" must be strictly increasing: {S}')
        mask = mask_of(S)
        if mask in coeffs:
            raise ParseError(f"duplicate subset {S}")
        vec = tuple(_parse_rational(v) for v in entry["c"])
        if len(vec) != k:
            raise ParseError(f"coefficient for {S} has length {len(vec)}, expected {k}")
        coeffs[mask] = vec
    return MultilinearPoly(n, k, coeffs)


def _report_json(report: CoverReport, n: int, num_planes: int) -> dict:
    return {
        "covered": report.covered,
        "n": n,
        "num_planes": num_planes,
        "num_uncovered": report.num_uncovered,
        "per_plane_counts": list(report.per_plane_counts),
        "uncovered_sample": [list(p.coords()) for p in report.uncovered_sample],
    }


def cmd_construct(args) -> int:
    needs_param = args.kind != "example-n6"
    if needs_param and args.param is None:
        sys.stderr.write(f"construct {args.kind} needs an integer parameter\n")
        return EXIT_USAGE
    try:
        if args.kind == "pow2":
            family = power_of_two_cover(args.param)
        elif args.kind == "levels":
            family = level_set_cover(args.param)
        elif args.kind == "balanced":
            family = balanced_even_cover(args.param)
        else:
            family = example_n6()
    except (OddDimension, MTooLarge, DimensionTooLarge, ValueError) as e:
        sys.stderr.write(f"construct: {e}\n")
        return EXIT_USAGE
    write_planes(family, sys.stdout)
    return EXIT_OK


def cmd_verify(args) -> int:
    with _open_input(args.planes) as stream:
        family = read_planes(stream)
    if args.n is not None and args.n != family.n:
        raise DimensionMismatch(f"file has n={family.n}, expected n={args.n}")
    report = verify_cover(family, workers=args.workers)
    _emit(_report_json(report, family.n, len(family)))
    return EXIT_OK if report.covered else EXIT_NEGATIVE


def cmd_interp(args) -> int:
    with _open_input(args.poly) as stream:
        poly = read_poly(stream)
    try:
        subset = sorted({int(tok) for tok in args.subset.split(",") if tok.strip()})
    except ValueError:
        sys.stderr.write(f"interp: cannot parse subset {args.subset!r}\n")
        return EXIT_USAGE
    d = len(subset)
    deg = degree(poly)
    if deg > d:
        raise DegreeTooHigh(f"deg(f) = {deg} exceeds |S| = {d}")
    # build_scheme enforces the even modulus and n >= d*m + m/2, exit 4
    scheme = build_scheme(poly.n, args.m, d, subset)
    table = inverse_wht(poly)
    recovered = recover_coefficient(scheme, table)
    direct = wht(table).coeffs.get(mask_of(subset), tuple([Fraction(0)] * poly.k))
    match = recovered == direct
    _emit(
        {
            "coefficient": [_rational_json(v) for v in recovered],
            "direct": [_rational_json(v) for v in direct],
            "match": match,
        }
    )
    return EXIT_OK if match else EXIT_NEGATIVE


def cmd_kernel(args) -> int:
    if len(args.a) != args.n:
        sys.stderr.write(f"kernel: expected {args.n} coefficients, got {len(args.a)}\n")
        return EXIT_USAGE
    coeffs = [_parse_rational(tok) for tok in args.a]
    system = build_system(coeffs, args.d)
    nullity = kernel_dim(system)
    applicable = args.n >= 2 * args.d + 1
    holds = nullity == 0 if applicable else None
    _emit(
        {
            "n": args.n,
            "d": args.d,
            "a": [_rational_json(c) for c in coeffs],
            "nullity": nullity,
            "guarantee_applies": applicable,
            "kernel_trivial": holds,
        }
    )
    return EXIT_OK if holds in (True, None) else EXIT_NEGATIVE


def cmd_search(args) -> int:
    config = SearchConfig(
        n=args.n,
        coeff_bound=args.coeff_bound,
        offset_bound=args.offset_bound,
        max_k=args.max_k,
        time_budget=args.time_budget,
        canonical_first_plane=not args.no_canonical_first,
    )
    outcome = min_cover_search(config)
    family = outcome.family
    _emit(
        {
            "status": outcome.status.value,
            "family": None
            if family is None
            else [
                {"a": [_rational_json(c) for c in p.a], "b": _rational_json(p.b)}
                for p in family
            ],
            "nodes_explored": outcome.nodes_explored,
            "candidate_pool_size": outcome.candidate_pool_size,
        }
    )
    return EXIT_OK if outcome.status is SearchStatus.FOUND_COVER else EXIT_NEGATIVE


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skewcube")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit a generated plane family as JSON lines")
    p.add_argument("kind", choices=["pow2", "levels", "balanced", "example-n6"])
    p.add_argument("param", type=int, nargs="?")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="exhaustively verify a plane file as a cover")
    p.add_argument("planes", nargs="?", default="-", help="plane file, or - for stdin")
    p.add_argument("--n", type=int, default=None, help="expected dimension")
    p.add_argument(
        "--workers",
        type=int,
        default=int(os.environ.get("SKEWCUBE_WORKERS", "1")),
        help="parallel verification processes (default SKEWCUBE_WORKERS or 1)",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("interp", help="recover one coefficient from values on W(m)")
    p.add_argument("poly", help="polynomial file, or - for stdin")
    p.add_argument("--m", type=int, required=True, help="even weight modulus")
    p.add_argument("--subset", "-S", required=True, help="target subset, e.g. 2,4")
    p.set_defaults(func=cmd_interp)

    p = sub.add_parser(
        "kernel",
        help="nullity of the top-coefficient system",
        epilog="negative coefficients need a -- separator: kernel 3 1 -- 1 -2 3",
    )
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.add_argument("a", nargs="+", help="n nonzero rational coefficients")
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("search", help="bounded search for a minimal skew cover")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--coeff-bound", "-B", type=int, default=1)
    p.add_argument("--offset-bound", type=int, default=None)
    p.add_argument("--max-k", type=int, default=8)
    p.add_argument("--time-budget", type=float, default=None)
    p.add_argument("--no-canonical-first", action="store_true")
    p.set_defaults(func=cmd_search)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except ParseError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE
    except _PRECONDITION_ERRORS as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_PRECONDITION
    except _VALIDATION_ERRORS as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_VALIDATION
    except SkewcubeError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_VALIDATION
    except FileNotFoundError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
