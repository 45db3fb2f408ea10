"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch or failed self-test,
2 malformed input (parse errors, bad files, ring mismatch), 3 unsupported
or inconsistent degree, 4 a constructed representation failed its own
verification (an implementation bug). The last line written to stderr is
always a ``key=value`` summary.
"""
from __future__ import annotations

import argparse
import json
import random
import sys

from .errors import (DegreeError, InvalidRing, ParseError, PfaffrepError,
                     RingMismatch, ShapeError)
from .pfaffian import (SkewMatrix, SquareMatrix, congruence, determinant, pfaffian,
                       skew_from_upper)
from .polynomial import PolynomialRing
from .ring import ZZ, make_ring
from . import representation as rp

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_DEGREE, EXIT_INTERNAL = range(5)

SELFTEST_RINGS = ("int", "rat", "mod:6", "mod:2")
_ALL_SYMBOLS = rp.symbol_names(4) + rp.symbol_names(5)


class CliFailure(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _coefficient_ring(spec: str, degree=None):
    if spec == "sym":
        if degree is None:
            raise DegreeError("ring 'sym' needs a degree")
        return rp.generic_ring(degree)
    ring = make_ring(spec)
    if isinstance(ring, PolynomialRing) and set(ring.all_variables()) & set(rp.FORM_VARIABLES):
        raise InvalidRing("coefficient ring must not use the form variables x, y, z")
    return ring


def _parse_form(spec, text, degree):
    if spec == "sym" and degree is None:
        probe = rp.form_ring(PolynomialRing(ZZ, _ALL_SYMBOLS)).parse_element(text)
        degree = probe.degree()
        if degree is None:
            raise rp.AmbiguousDegree("the zero form needs --degree")
        rp._check_degree(degree)
    return rp.form_ring(_coefficient_ring(spec, degree)).parse_element(text)


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliFailure(EXIT_INPUT, f"cannot read {path}: {exc.strerror}") from None


def _load_json(path):
    try:
        return json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise CliFailure(EXIT_INPUT, f"{path}: invalid JSON ({exc.msg} at offset {exc.pos})") from None


def _emit(args, text):
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# commands

def cmd_represent(args):
    if args.polynomial is None:
        if args.ring != "sym" or args.degree is None:
            raise CliFailure(EXIT_INPUT, "a polynomial is required (or --ring sym with --degree)")
        f = rp.generic_form(args.degree)
    else:
        f = _parse_form(args.ring, args.polynomial, args.degree)
    rep = rp.represent(f, args.degree)
    if not rp.verify(rep, f, cross_check=args.cross_check):
        raise CliFailure(EXIT_INTERNAL, "constructed representation failed verification")
    if args.format == "json":
        text = json.dumps(rp.to_json(rep), indent=2) + "\n"
    elif args.format == "latex":
        text = rp.to_latex(rep)
    else:
        text = rp.to_text(rep) + f"verified: Pf(M) = {f}\n"
    _emit(args, text)
    return EXIT_OK, f"degree={rep.degree} ring={rep.ring.spec()}"


def cmd_verify(args):
    doc = _load_json(args.representation)
    try:
        rep = rp.from_json(doc)
    except (ParseError, InvalidRing, ShapeError, IndexError) as exc:
        raise CliFailure(EXIT_INPUT, f"{args.representation}: {exc}") from None
    expected = _coefficient_ring(args.ring, rep.degree)
    if rep.ring != expected:
        raise RingMismatch(f"representation is over {rep.ring.spec()}, "
                           f"--ring gives {expected.spec()}")
    f = rp.form_ring(expected).parse_element(args.polynomial)
    diff = rep.pfaffian() - f
    if diff:
        print(f"mismatch: Pf(M) - f = {diff}")
        return EXIT_MISMATCH, "verified=false"
    if args.cross_check and not rp.verify(rep, f, cross_check=True):
        print("mismatch: det(M) != f^2")
        return EXIT_MISMATCH, "verified=false check=det"
    print("verified: Pf(M) = f" + (" and det(M) = f^2" if args.cross_check else ""))
    return EXIT_OK, "verified=true"


def cmd_pf(args):
    if args.ring == "sym":
        raise CliFailure(EXIT_INPUT, "ring 'sym' is not available for pf; name the variables, e.g. int[T1,T2]")
    ring = make_ring(args.ring)
    doc = _load_json(args.matrix)
    size = doc.get("size") if isinstance(doc, dict) else None
    if isinstance(size, int) and size % 2:
        raise DegreeError(f"odd size {size}: the Pfaffian needs an even-size matrix")
    try:
        a = SkewMatrix.from_json(ring, doc)
    except IndexError as exc:
        raise CliFailure(EXIT_INPUT, str(exc)) from None
    value = ring.format_element(pfaffian(a))
    if args.format == "json":
        print(json.dumps({"pfaffian": value}))
    else:
        print(value)
    return EXIT_OK, f"size={a.size}"


def cmd_nice(args):
    if args.degree not in (2, 3, 4, 5):
        raise DegreeError(f"niceness is checked for degrees 2..5, got {args.degree}")
    report = rp.is_nice(rp.build(rp.generic_coeffs(args.degree)))
    if args.format == "json":
        print(json.dumps({
            "degree": args.degree,
            "nice": report.nice,
            "violations": [{"rule": v.rule, "matrix": v.matrix, "i": v.i, "j": v.j,
                            "detail": v.detail} for v in report.violations],
        }, indent=2))
    else:
        print("\n".join(report.lines()))
    return EXIT_OK, f"degree={args.degree} nice={str(report.nice).lower()}"


def cmd_selftest(args):
    rings = [args.ring] if args.ring else list(SELFTEST_RINGS)
    if "sym" in rings:
        raise CliFailure(EXIT_INPUT, "selftest always runs the symbolic checks; --ring selects a concrete ring")
    lines, failures = run_selftest(rings, args.trials, args.seed)
    sys.stdout.write("\n".join(lines) + "\n")
    if failures:
        return EXIT_MISMATCH, f"failures={len(failures)}"
    return EXIT_OK, "failures=0"


def run_selftest(ring_specs, trials, seed):
    """Run the symbolic, randomized and identity suites; return (report lines, failures)."""
    rng = random.Random(seed)
    lines = [f"pfaffrep selftest seed={seed} trials={trials}"]
    failures = []

    lines.append("symbolic identities")
    sym_ok = 0
    for d in rp.DEGREES:
        ok = rp.build(rp.generic_coeffs(d)).pfaffian() == rp.generic_form(d)
        sym_ok += ok
        lines.append(f"  degree {d}: Pf(M) = generic form ... {'pass' if ok else 'FAIL'}")
        if not ok:
            failures.append(f"symbolic degree {d}")

    lines.append("ring trials " + " ".join(f"{'d=' + str(d):>9}" for d in rp.DEGREES))
    for spec in ring_specs:
        ring = make_ring(spec)
        cells = []
        for d in rp.DEGREES:
            passed = 0
            for _ in range(trials):
                slots = [ring.random_element(rng) for _ in rp.MONOMIALS[d]]
                c = rp.CoefficientVector(d, slots, ring)
                f = rp.poly_from_coeffs(c)
                if rp.verify(rp.represent(f, d), f):
                    passed += 1
                else:
                    failures.append(f"ring={spec} degree={d} coefficients="
                                    + ",".join(ring.format_element(s) for s in slots))
            cells.append(f"{passed}/{trials}")
        lines.append(f"  {spec:<9} " + " ".join(f"{c:>9}" for c in cells))

    lines.append("pfaffian identities")
    for spec in ring_specs:
        ring = make_ring(spec)
        passed = total = 0
        for size in (2, 4, 6, 8, 10):
            for _ in range(trials):
                a = _random_skew(ring, size, rng)
                total += 1
                pf = pfaffian(a)
                if determinant(a) == pf * pf:
                    passed += 1
                else:
                    failures.append(f"det=Pf^2 ring={spec} size={size} matrix={json.dumps(a.to_json())}")
        lines.append(f"  {'det = Pf^2':<24} {spec:<7} sizes 2,4,6,8,10  {passed}/{total}")
        passed = total = 0
        for size in (4, 6):
            for _ in range(trials):
                a = _random_skew(ring, size, rng)
                x = SquareMatrix(ring, [[ring.random_element(rng) for _ in range(size)]
                                        for _ in range(size)])
                total += 1
                if pfaffian(congruence(x, a)) == determinant(x) * pfaffian(a):
                    passed += 1
                else:
                    failures.append(f"congruence ring={spec} size={size}")
        lines.append(f"  {'Pf(XAX^t) = det(X)Pf(A)':<24} {spec:<7} sizes 4,6         {passed}/{total}")

    verdict = "all pass" if not failures else f"{len(failures)} failures"
    lines.append(f"{sym_ok}/{len(rp.DEGREES)} symbolic identities, "
                 f"{trials}×{len(ring_specs)} ring trials: {verdict}")
    for item in failures:
        lines.append(f"FAILED {item}")
    return lines, failures


def _random_skew(ring, size, rng):
    entries = [(i, j, ring.random_element(rng))
               for i in range(1, size + 1) for j in range(i + 1, size + 1)]
    return skew_from_upper(ring, size, entries)


# ---------------------------------------------------------------------------

def _positive(text):
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return n


def build_parser():
    parser = argparse.ArgumentParser(
        prog="pfaffrep",
        description="Linear Pfaffian representations of ternary forms of degree <= 5.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("text", "json")):
        p.add_argument("--ring", default="int",
                       help="int, rat, mod:N, sym, or a layered spec such as int[T1,T2]")
        p.add_argument("--format", choices=formats, default="text")

    p = sub.add_parser("represent", help="construct and emit a representation")
    common(p, ("text", "json", "latex"))
    p.add_argument("polynomial", nargs="?")
    p.add_argument("--degree", type=int)
    p.add_argument("--cross-check", action="store_true", help="also check det(M) = f^2")
    p.add_argument("--output", help="write the document here instead of stdout")
    p.set_defaults(func=cmd_represent)

    p = sub.add_parser("verify", help="check a representation file against a form")
    common(p)
    p.add_argument("polynomial")
    p.add_argument("representation")
    p.add_argument("--cross-check", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("pf", help="Pfaffian of a skew matrix given as JSON")
    common(p)
    p.add_argument("matrix")
    p.set_defaults(func=cmd_pf)

    p = sub.add_parser("nice", help="niceness verdict for the generic construction")
    p.add_argument("degree", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_nice, ring="sym")

    p = sub.add_parser("selftest", help="run the symbolic and randomized suites")
    p.add_argument("--ring", default=None, help="restrict trials to one ring")
    p.add_argument("--trials", type=_positive, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = EXIT_OK if exc.code == 0 else EXIT_INPUT
        print(f"result command=none status={'ok' if code == 0 else 'usage'} exit={code}",
              file=sys.stderr)
        return code
    status, detail = "ok", ""
    try:
        code, detail = args.func(args)
        if code == EXIT_MISMATCH:
            status = "mismatch"
    except CliFailure as exc:
        code, status = exc.code, "error"
        print(f"error: {exc}", file=sys.stderr)
    except ParseError as exc:
        code, status = EXIT_INPUT, "error"
        detail = f"offset={exc.position}"
        print(f"parse error: {exc}", file=sys.stderr)
    except DegreeError as exc:
        code, status = EXIT_DEGREE, "error"
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
    except (InvalidRing, RingMismatch, ShapeError) as exc:
        code, status = EXIT_INPUT, "error"
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
    except PfaffrepError as exc:
        code, status = EXIT_INPUT, "error"
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
    summary = f"result command={args.command} status={status} exit={code}"
    print(summary + (f" {detail}" if detail else ""), file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
