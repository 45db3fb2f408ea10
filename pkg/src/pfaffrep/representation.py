"""Explicit linear Pfaffian representations of ternary forms of degree 1 to 5.

A representation is a triple ``(A, B, C)`` of constant skew matrices of size
``2d`` such that ``Pf(x*A + y*B + z*C) = f(x, y, z)``. The builders below
work over any commutative ring with 1: every entry is either a constant
``0``/``1``/``-1``, a coefficient of ``f`` with a sign, or (degree 5 only) a
polynomial expression in the coefficients without division.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import (AmbiguousDegree, DegreeError, RequiresSymbolicRing,
                     RingMismatch, ShapeError, UnsupportedDegree)
from .pfaffian import SkewMatrix, determinant, pfaffian, skew_from_upper
from .polynomial import Poly, PolynomialRing
from .ring import ZZ, Ring, make_ring

FORM_VARIABLES = ("x", "y", "z")

# Slot k (1-based) of a degree-d coefficient vector multiplies MONOMIALS[d][k-1].
MONOMIALS = {
    1: ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
    2: ((2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1)),
    3: ((3, 0, 0), (0, 3, 0), (0, 0, 3), (2, 1, 0), (1, 2, 0), (2, 0, 1),
        (1, 0, 2), (0, 2, 1), (0, 1, 2), (1, 1, 1)),
    4: ((4, 0, 0), (0, 4, 0), (0, 0, 4), (3, 1, 0), (2, 2, 0), (1, 3, 0),
        (3, 0, 1), (2, 0, 2), (1, 0, 3), (0, 3, 1), (0, 2, 2), (0, 1, 3),
        (2, 1, 1), (1, 2, 1), (1, 1, 2)),
    5: ((5, 0, 0), (0, 5, 0), (0, 0, 5), (4, 1, 0), (3, 2, 0), (2, 3, 0),
        (1, 4, 0), (4, 0, 1), (3, 0, 2), (2, 0, 3), (1, 0, 4), (0, 4, 1),
        (0, 3, 2), (0, 2, 3), (0, 1, 4), (3, 1, 1), (1, 3, 1), (1, 1, 3),
        (2, 2, 1), (2, 1, 2), (1, 2, 2)),
}

DEGREES = tuple(MONOMIALS)
DERIVED_NAMES = ("a23", "a29", "a39", "b23", "b29", "b39", "b68", "b69", "c23")

# Upper triangles, row i starting at the diagonal. Tokens: 0, 1, -1,
# T<k>/P<k> (slot k, optionally negated) or a name from DERIVED_NAMES.
_TABLES = {
    1: ("0 T1\n0", "0 T2\n0", "0 T3\n0"),
    2: ("""
        0 1 T4 T5
          0 0  0
            0  T1
               0""", """
        0 0 T2 T6
          0 0  -1
            0  0
               0""", """
        0 0 0 T3
          0 1 0
            0 0
              0"""),
    3: ("""
        0 T1 T10 0  T6 T5
          0  0   0  0  0
             0   -1 0  0
                 0  0  0
                    0  -1
                       0""", """
        0 T4 0  0 -1 T2
          0  -1 0 0  0
             0  0 0  0
                0 -1 0
                  0  0
                     0""", """
        0 0 T9 1 T7 T8
          0 0  0 0  1
            0  0 T3 0
               0 0  0
                 0  0
                    0"""),
    # Row/column 7 (a78, b57, c27) carries the sign that makes Pf = +f.
    4: ("""
        0 T1 T6 0 T4  0 0 0
          0  0  0 0   0 0 0
             0  1 T15 0 0 T9
                0 0   0 0 0
                  0   1 0 T8
                      0 0 0
                        0 1
                          0""", """
        0 0 T2 0 T5  0  0 0
          0 0  0 0   -1 0 T14
            0  0 T11 0  0 0
               0 0   0  0 -1
                 0   0  -1 0
                     0  0  0
                        0  0
                           0""", """
        0 T7 T10 0 T13 -1 0 0
          0  0   0 0   0  1 0
             0   0 T12 0  0 T3
                 0 1   0  0 0
                   0   0  0 0
                       0  0 0
                          0 0
                            0"""),
    5: ("""
        0 P1 0   0 0  0 0  0   0   0
          0  a23 0 P7 0 P5 -P9 a29 0
             0   1 0  0 0  0   a39 0
                 0 0  0 0  0   0   0
                   0  1 0  0   0   0
                      0 0  0   0   0
                        0  1   0   0
                           0   0   0
                               0   1
                                   0""", """
        0 P4 1   0 0  0 0  0   0   0
          0  b23 0 P2 0 P6 0   b29 0
             0   0 0  0 0  P15 b39 0
                 0 0  0 0  1   0   0
                   0  0 0  0   0   0
                      0 0  b68 b69 1
                        0  0   1   0
                           0   0   0
                               0   0
                                   0""", """
        0 P8 0   0 1 0 0 0    0    0
          0  c23 0 0 0 0 0    0    1
             0   0 0 0 0 P3   0    0
                 0 0 0 0 0    1    0
                   0 0 0 0    0    0
                     0 1 0    -P10 0
                       0 0    0    0
                         0    -P11 0
                              0    0
                                   0"""),
}


def _parse_table(text, size):
    lines = [ln.split() for ln in text.strip().splitlines()]
    if len(lines) != size:
        raise ValueError(f"table has {len(lines)} rows, expected {size}")
    cells = []
    for i, toks in enumerate(lines, 1):
        if len(toks) != size - i + 1 or toks[0] != "0":
            raise ValueError(f"malformed table row {i}: {toks}")
        for j, tok in enumerate(toks[1:], i + 1):
            if tok != "0":
                cells.append((i, j, tok))
    return tuple(cells)


LAYOUTS = {d: tuple(_parse_table(t, 2 * d) for t in _TABLES[d]) for d in DEGREES}


def symbol_names(d: int) -> tuple:
    """Names of the generic coefficients of degree ``d`` (T1.. or P1..)."""
    _check_degree(d)
    prefix = "P" if d == 5 else "T"
    return tuple(f"{prefix}{k}" for k in range(1, len(MONOMIALS[d]) + 1))


@lru_cache(maxsize=None)
def generic_ring(d: int) -> PolynomialRing:
    """``Z[T1..Tn]`` (or ``Z[P1..P21]`` for ``d = 5``)."""
    return PolynomialRing(ZZ, symbol_names(d))


@lru_cache(maxsize=None)
def form_ring(ring: Ring) -> PolynomialRing:
    """``ring[x, y, z]``."""
    return PolynomialRing(make_ring(ring), FORM_VARIABLES)


def _check_degree(d):
    if not isinstance(d, int) or d not in MONOMIALS:
        raise UnsupportedDegree(f"degree must be in 1..5, got {d!r}")


@dataclass(frozen=True)
class CoefficientVector:
    degree: int
    slots: tuple
    ring: Ring

    def __post_init__(self):
        _check_degree(self.degree)
        object.__setattr__(self, "slots", tuple(self.ring.coerce(s) for s in self.slots))
        if len(self.slots) != len(MONOMIALS[self.degree]):
            raise ShapeError(f"degree {self.degree} needs {len(MONOMIALS[self.degree])} "
                             f"slots, got {len(self.slots)}")

    def __getitem__(self, k):
        """1-based slot access."""
        return self.slots[k - 1]


def generic_coeffs(d: int) -> CoefficientVector:
    ring = generic_ring(d)
    return CoefficientVector(d, ring.gens(), ring)


def poly_from_coeffs(c: CoefficientVector) -> Poly:
    return form_ring(c.ring).from_terms(zip(MONOMIALS[c.degree], c.slots))


def generic_form(d: int) -> Poly:
    return poly_from_coeffs(generic_coeffs(d))


def coeffs_from_poly(f: Poly, d: int) -> CoefficientVector:
    """Read the slots of a homogeneous form of degree ``d``."""
    _check_degree(d)
    ring = _form_coefficient_ring(f)
    table = {exps: k for k, exps in enumerate(MONOMIALS[d])}
    slots = [ring.zero] * len(table)
    for exps, c in f.items():
        k = table.get(exps)
        if k is None:
            raise DegreeError(f"term with exponents {exps} is not of degree {d}")
        slots[k] = c
    return CoefficientVector(d, tuple(slots), ring)


def _form_coefficient_ring(f) -> Ring:
    if not isinstance(f, Poly) or f.ring.variables != FORM_VARIABLES:
        raise RingMismatch("expected a polynomial in x, y, z")
    return f.ring.base


def derived_entries(c: CoefficientVector) -> dict:
    """The nine non-constant entries of the degree-5 matrices that are not single coefficients."""
    if c.degree != 5:
        raise DegreeError(f"derived entries exist for degree 5 only, got {c.degree}")
    P = (None,) + c.slots
    one = c.ring.one
    two = one + one
    return {
        "a23": -(two * P[6] * P[5] * P[3]) - P[6] * P[18] - P[5] * P[14] + one - P[17],
        "a29": -(P[6] * P[5] * P[11]) - P[15] * P[5] * P[5] - P[5] * P[21] + P[16],
        "a39": -(P[5] * P[3]) - P[18],
        "b23": -(P[6] * P[6] * P[3]) - P[12] - P[6] * P[14],
        "b29": (P[5] * P[5] * P[3] + P[5] * P[18] - P[6] * P[6] * P[11]
                - P[6] * P[15] * P[5] - P[6] * P[21] - P[9] + P[19]),
        "b39": -(P[6] * P[3]) - P[14],
        "b68": P[6] * P[11] + P[15] * P[5] + P[21],
        "b69": -(P[5] * P[11]) - one - P[20],
        "c23": -(P[6] * P[15]) - P[13],
    }


@dataclass(frozen=True)
class Representation:
    """``M = x*A + y*B + z*C`` with constant skew matrices over a coefficient ring."""

    degree: int
    A: SkewMatrix
    B: SkewMatrix
    C: SkewMatrix
    derived: dict | None = field(default=None, compare=False)

    @property
    def ring(self) -> Ring:
        return self.A.ring

    @property
    def size(self) -> int:
        return self.A.size

    @property
    def matrices(self):
        return {"A": self.A, "B": self.B, "C": self.C}

    @property
    def form_ring(self) -> PolynomialRing:
        return form_ring(self.ring)

    def pencil(self) -> SkewMatrix:
        """The matrix of linear forms over ``ring[x, y, z]``."""
        fr = self.form_ring
        kx, ky, kz = (fr.pack(e) for e in MONOMIALS[1])
        keys = set(self.A.upper) | set(self.B.upper) | set(self.C.upper)
        upper = {}
        for key in keys:
            terms = {}
            for k, m in ((kx, self.A), (ky, self.B), (kz, self.C)):
                v = m.upper.get(key)
                if v is not None:
                    terms[k] = v
            upper[key] = Poly(fr, terms)
        return SkewMatrix(fr, self.size, upper)

    def at(self, point) -> SkewMatrix:
        """``x0*A + y0*B + z0*C`` for a point of coefficient-ring elements."""
        x0, y0, z0 = (self.ring.coerce(p) for p in point)
        return self.A.scale(x0) + self.B.scale(y0) + self.C.scale(z0)

    def pfaffian(self) -> Poly:
        return pfaffian(self.pencil())


def _build(c: CoefficientVector, expected: int, derived=None) -> Representation:
    if c.degree != expected:
        raise DegreeError(f"expected a degree-{expected} coefficient vector, got degree {c.degree}")
    ring = c.ring
    prefix = "P" if expected == 5 else "T"
    mats = []
    for layout in LAYOUTS[expected]:
        entries = []
        for i, j, tok in layout:
            sign = 1
            if tok.startswith("-"):
                sign, tok = -1, tok[1:]
            if tok == "1":
                v = ring.one
            elif tok[0] == prefix and tok[1:].isdigit():
                v = c[int(tok[1:])]
            else:
                v = derived[tok]
            entries.append((i, j, -v if sign < 0 else v))
        mats.append(skew_from_upper(ring, 2 * expected, entries))
    return Representation(expected, *mats, derived=derived)


def build_m1(c: CoefficientVector) -> Representation:
    return _build(c, 1)


def build_m2(c: CoefficientVector) -> Representation:
    """4x4 pencil; the third matrix is the ``z`` coefficient (the [c_ij] block)."""
    return _build(c, 2)


def build_m3(c: CoefficientVector) -> Representation:
    return _build(c, 3)


def build_m4(c: CoefficientVector) -> Representation:
    return _build(c, 4)


def build_m5(c: CoefficientVector) -> Representation:
    """10x10 pencil ``x*A + y*B + z*C`` with the nine derived entries filled in.

    The ``x`` in front of ``A`` is an editorial reading; without it the
    Pfaffian is not homogeneous.
    """
    if c.degree != 5:
        raise DegreeError(f"expected a degree-5 coefficient vector, got degree {c.degree}")
    return _build(c, 5, derived_entries(c))


BUILDERS = {1: build_m1, 2: build_m2, 3: build_m3, 4: build_m4, 5: build_m5}


def build(c: CoefficientVector) -> Representation:
    return BUILDERS[c.degree](c)


def represent(f: Poly, d: int | None = None) -> Representation:
    """A linear Pfaffian representation of the ternary form ``f``."""
    _form_coefficient_ring(f)
    deg = f.degree()
    if deg is None:
        if d is None:
            raise AmbiguousDegree("the zero form needs an explicit degree")
        _check_degree(d)
    else:
        if d is None:
            d = deg
        elif deg != d:
            raise DegreeError(f"form has degree {deg}, not {d}")
        _check_degree(d)
        if not f.is_homogeneous(d):
            raise DegreeError("form is not homogeneous")
    return build(coeffs_from_poly(f, d))


def verify(rep: Representation, f: Poly, *, cross_check=False, points=None) -> bool:
    """Exact check of ``Pf(x*A + y*B + z*C) == f``.

    With ``cross_check`` also require ``det(M) == f^2``: symbolically when
    ``points`` is None, otherwise at each of the given ``(x, y, z)`` points.
    """
    if not isinstance(f, Poly) or f.ring != rep.form_ring:
        got = f.ring.spec() if isinstance(f, Poly) else type(f).__name__
        raise RingMismatch(f"form lives in {got}, representation in {rep.form_ring.spec()}")
    if rep.pfaffian() != f:
        return False
    if cross_check:
        if points is None:
            return determinant(rep.pencil()) == f * f
        for pt in points:
            val = f.evaluate(pt)
            if determinant(rep.at(pt)) != val * val:
                return False
    return True


@dataclass(frozen=True)
class NiceViolation:
    rule: str  # "entry" (disallowed value) or "unique" (coefficient not used exactly once)
    detail: str
    matrix: str | None = None
    i: int | None = None
    j: int | None = None
    value: object = None


@dataclass(frozen=True)
class NiceReport:
    nice: bool
    violations: tuple

    def __bool__(self):
        return self.nice

    def lines(self):
        out = [f"nice: {str(self.nice).lower()}"]
        for v in self.violations:
            where = f"{v.matrix}[{v.i},{v.j}] " if v.matrix else ""
            out.append(f"  {v.rule}: {where}{v.detail}")
        return out


def is_nice(rep: Representation) -> NiceReport:
    """Decide whether ``rep`` only uses 0, +-1 and signed coefficients, each coefficient exactly once."""
    ring = rep.ring
    names = symbol_names(rep.degree)
    if not (isinstance(ring, PolynomialRing) and ring.base == ZZ
            and set(names) <= set(ring.variables)):
        raise RequiresSymbolicRing(
            f"niceness is defined over Z[{names[0]}..{names[-1]}], got {ring.spec()}")
    gens = {name: ring.gen(name) for name in names}
    signed = {}
    for name, g in gens.items():
        signed[g] = name
        signed[-g] = name
    units = (ring.one, -ring.one)
    uses = {name: [] for name in names}
    violations = []
    for label, m in rep.matrices.items():
        for i, j, v in m.items():
            if v in units:
                continue
            name = signed.get(v)
            if name is not None:
                uses[name].append((label, i, j))
                continue
            violations.append(NiceViolation(
                "entry", f"{ring.format_element(v)} is not 0, +-1 or a signed coefficient",
                label, i, j, v))
    for name in names:
        if len(uses[name]) != 1:
            where = ", ".join(f"{m}[{i},{j}]" for m, i, j in uses[name]) or "no entry"
            violations.append(NiceViolation(
                "unique", f"{name} occupies {len(uses[name])} entries ({where})"))
    return NiceReport(not violations, tuple(violations))


# ---------------------------------------------------------------------------
# serialization

def to_json(rep: Representation) -> dict:
    fmt = rep.ring.format_element
    doc = {
        "degree": rep.degree,
        "size": rep.size,
        "ring": rep.ring.spec(),
        "matrices": {name: [[i, j, fmt(v)] for i, j, v in m.items()]
                     for name, m in rep.matrices.items()},
    }
    if rep.derived is not None:
        doc["derived"] = {k: fmt(rep.derived[k]) for k in DERIVED_NAMES}
    return doc


def from_json(doc) -> Representation:
    try:
        degree = doc["degree"]
        size = doc["size"]
        ring = make_ring(doc["ring"])
        mats = doc["matrices"]
        _check_degree(degree)
        if size != 2 * degree:
            raise ShapeError(f"size {size} does not match degree {degree}")
        built = [SkewMatrix.from_json(ring, {"size": size, "entries": mats[name]})
                 for name in ("A", "B", "C")]
    except (KeyError, TypeError) as exc:
        raise ShapeError(f"malformed representation document: {exc}") from None
    derived = None
    if "derived" in doc:
        derived = {k: ring.parse_element(str(v)) for k, v in doc["derived"].items()}
    return Representation(degree, *built, derived=derived)


def to_latex(rep: Representation) -> str:
    """Upper-triangle ``smallmatrix`` blocks, lower triangle marked ``*``."""
    fmt = rep.ring.format_element
    n = rep.size
    blocks = []
    for name, m in rep.matrices.items():
        rows = []
        for i in range(1, n + 1):
            cells = []
            for j in range(1, n + 1):
                if j >= i:
                    v = m.upper.get((i, j))
                    cells.append("0" if v is None else fmt(v, "latex"))
                elif i == n and j == 1:
                    cells.append("*")
                else:
                    cells.append("")
            rows.append("&".join(cells))
        body = "\\\\\n\\noalign{\\medskip}".join(rows)
        blocks.append(f"[{name.lower()}_{{ij}}] = \\left[\n\\begin{{smallmatrix}}\n"
                      f"{body}\n\\end{{smallmatrix}} \\right]")
    return ",\n\\quad\n".join(blocks) + "\n"


def to_text(rep: Representation) -> str:
    """Plain upper-triangle listing of the three matrices."""
    fmt = rep.ring.format_element
    n = rep.size
    out = [f"degree {rep.degree} representation over {rep.ring.spec()} ({n}x{n})"]
    for name, m in rep.matrices.items():
        out.append(f"{name} =")
        cells = [[fmt(m.upper[(i, j)]) if (i, j) in m.upper else ("0" if j >= i else "")
                  for j in range(1, n + 1)] for i in range(1, n + 1)]
        width = max(len(c) for row in cells for c in row)
        for row in cells:
            out.append("  " + " ".join(c.rjust(width) for c in row))
    if rep.derived is not None:
        out.append("derived entries:")
        for k in DERIVED_NAMES:
            out.append(f"  {k} = {fmt(rep.derived[k])}")
    return "\n".join(out) + "\n"
