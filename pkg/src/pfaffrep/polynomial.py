"""Sparse multivariate polynomials over any :class:`~pfaffrep.ring.Ring`.

A monomial ``x1^e1 ... xn^en`` is packed into a single integer::

    key = (e1 + ... + en) << (n*B) | e1 << ((n-1)*B) | ... | en

with ``B = 16`` bits per exponent. Multiplying monomials is adding keys, and
sorting keys in descending order gives graded-lexicographic descending
order (``x > y > z`` for the variable order ``(x, y, z)``).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

from . import kernels as _k
from .errors import ParseError, RingMismatch, ShapeError
from .ring import Ring, check_variable_names

EXP_BITS = 16
_EXP_MASK = (1 << EXP_BITS) - 1


@dataclass(frozen=True)
class PolynomialRing(Ring):
    """``base[variables]``; nests, so ``base`` may itself be polynomial."""

    base: Ring
    variables: tuple

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        check_variable_names(self.variables, self.base)

    # -- monomial packing -------------------------------------------------
    @cached_property
    def nvars(self) -> int:
        return len(self.variables)

    @cached_property
    def _shift(self) -> int:
        return self.nvars * EXP_BITS

    @cached_property
    def _index(self) -> dict:
        return {name: i for i, name in enumerate(self.variables)}

    def pack(self, exps) -> int:
        if len(exps) != self.nvars:
            raise ShapeError(f"monomial {tuple(exps)} has {len(exps)} exponents, "
                             f"ring has {self.nvars} variables")
        key = 0
        for e in exps:
            if e < 0 or e > _EXP_MASK or int(e) != e:
                raise ShapeError(f"bad exponent {e!r}")
            key = (key << EXP_BITS) | int(e)
        return (sum(exps) << self._shift) | key

    def unpack(self, key: int) -> tuple:
        n = self.nvars
        return tuple((key >> ((n - 1 - i) * EXP_BITS)) & _EXP_MASK for i in range(n))

    def key_degree(self, key: int) -> int:
        return key >> self._shift

    # -- ring contract ----------------------------------------------------
    @cached_property
    def zero(self):
        return Poly(self, {})

    @cached_property
    def one(self):
        return self.constant(self.base.one)

    def embed_integer(self, k):
        return self.constant(self.base.embed_integer(k))

    def constant(self, c) -> "Poly":
        return Poly(self, {0: c} if c else {})

    def is_element(self, a):
        return isinstance(a, Poly) and (a.ring is self or a.ring == self)

    def coerce(self, a) -> "Poly":
        if isinstance(a, Poly):
            if a.ring is self or a.ring == self:
                return a
            if self.base.is_element(a):
                return self.constant(a)
            raise RingMismatch(f"{a.ring.spec()} vs {self.spec()}")
        if type(a) is int:
            return self.embed_integer(a)
        if self.base.is_element(a):
            return self.constant(a)
        raise RingMismatch(f"{a!r} is not an element of {self.spec()}")

    def canonical(self, a):
        return Poly(self, {k: v for k, v in a.terms.items() if v})

    def all_variables(self):
        return self.variables + self.base.all_variables()

    def gens(self) -> tuple:
        return tuple(self.gen(name) for name in self.variables)

    def gen(self, name: str) -> "Poly":
        exps = [0] * self.nvars
        exps[self._index[name]] = 1
        return Poly(self, {self.pack(exps): self.base.one})

    def from_terms(self, terms) -> "Poly":
        """Combine ``(exponents, coefficient)`` pairs; duplicates are summed."""
        out = {}
        for exps, c in terms:
            key = self.pack(tuple(exps))
            c = self.base.coerce(c)
            prev = out.get(key)
            out[key] = c if prev is None else prev + c
        return Poly(self, {k: v for k, v in out.items() if v})

    def random_element(self, rng, max_degree=3, max_terms=4):
        terms = []
        for _ in range(rng.randint(0, max_terms)):
            exps = [0] * self.nvars
            for _ in range(rng.randint(0, max_degree)):
                exps[rng.randrange(self.nvars)] += 1
            terms.append((exps, self.base.random_element(rng)))
        return self.from_terms(terms)

    def power(self, a, e):
        return a ** e

    # -- text ---------------------------------------------------------------
    def scalar_ring(self):
        return self.base.scalar_ring()

    def parse_scalar(self, num, den, position):
        return self.base.parse_scalar(num, den, position)

    def from_flat(self, scalar, powers, position=0):
        exps = [0] * self.nvars
        rest = {}
        for name, e in powers.items():
            i = self._index.get(name)
            if i is None:
                rest[name] = e
            else:
                exps[i] = e
        coeff = self.base.from_flat(scalar, rest, position)
        return Poly(self, {self.pack(exps): coeff} if coeff else {})

    def flat_terms(self, a):
        for key in sorted(a.terms, reverse=True):
            exps = self.unpack(key)
            own = tuple((name, e) for name, e in zip(self.variables, exps) if e)
            for scalar, inner in self.base.flat_terms(a.terms[key]):
                yield scalar, inner + own

    def parse_element(self, text: str) -> "Poly":
        return parse(self, text)

    def format_element(self, a, style="plain") -> str:
        return format_poly(a, style)

    def spec(self) -> str:
        return f"{self.base.spec()}[{','.join(self.variables)}]"


def _built_over(outer, inner) -> bool:
    ring = getattr(outer, "base", None)
    while ring is not None:
        if ring == inner:
            return True
        ring = getattr(ring, "base", None)
    return False


class Poly:
    """Immutable sparse polynomial; ``terms`` maps packed monomials to nonzero coefficients."""

    __slots__ = ("ring", "terms", "_deg", "_hash")

    def __init__(self, ring: PolynomialRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._deg = -2
        self._hash = None

    def _wrap(self, terms):
        return Poly(self.ring, terms)

    def _other(self, other):
        """Coerce ``other``; ``None`` means ``other`` lives in a ring built over ours."""
        if isinstance(other, Poly):
            if other.ring is self.ring or other.ring == self.ring:
                return other
            if _built_over(other.ring, self.ring):
                return None
        return self.ring.coerce(other)

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return other + self
        return self._wrap(_k.add_terms(self.terms, o.terms))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return -(other - self)
        return self._wrap(_k.sub_terms(self.terms, o.terms))

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return other - self
        return self._wrap(_k.sub_terms(o.terms, self.terms))

    def __neg__(self):
        return self._wrap(_k.neg_terms(self.terms))

    def __mul__(self, other):
        if not (isinstance(other, Poly) and (other.ring is self.ring or other.ring == self.ring)):
            if isinstance(other, Poly) and _built_over(other.ring, self.ring):
                return other * self
            c = self.ring.base.coerce(other)
            return self._wrap(_k.scale_terms(self.terms, c))
        if not self.terms or not other.terms:
            return self.ring.zero
        if self.max_degree() + other.max_degree() > _EXP_MASK:
            raise OverflowError("total degree exceeds the packed exponent width")
        return self._wrap(_k.mul_terms(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a non-negative integer")
        return Ring.power(self.ring, self, e)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return (other.ring is self.ring or other.ring == self.ring) and self.terms == other.terms
        try:
            return self.terms == self.ring.coerce(other).terms
        except RingMismatch:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self):
        return f"Poly({format_poly(self)!r}, ring={self.ring.spec()!r})"

    def __str__(self):
        return format_poly(self)

    # -- queries ------------------------------------------------------------
    def max_degree(self) -> int:
        if self._deg == -2:
            self._deg = self.ring.key_degree(max(self.terms)) if self.terms else -1
        return self._deg

    def degree(self):
        """Total degree, or ``None`` for the zero polynomial."""
        d = self.max_degree()
        return None if d < 0 else d

    def is_homogeneous(self, d: int) -> bool:
        kd = self.ring.key_degree
        return all(kd(k) == d for k in self.terms)

    def items(self):
        """``(exponents, coefficient)`` pairs in graded-lex descending order."""
        unpack = self.ring.unpack
        return [(unpack(k), self.terms[k]) for k in sorted(self.terms, reverse=True)]

    def coefficient(self, exps):
        c = self.terms.get(self.ring.pack(tuple(exps)))
        return self.ring.base.zero if c is None else c

    def evaluate(self, point):
        """Substitute ``point`` (one base-ring element per variable)."""
        ring = self.ring
        if len(point) != ring.nvars:
            raise ShapeError(f"point has {len(point)} entries, ring has {ring.nvars} variables")
        base = ring.base
        point = [base.coerce(p) for p in point]
        cache = {}
        total = base.zero
        for key, c in self.terms.items():
            term = c
            for i, e in enumerate(ring.unpack(key)):
                if e:
                    pw = cache.get((i, e))
                    if pw is None:
                        pw = cache[(i, e)] = base.power(point[i], e)
                    term = term * pw
            total = total + term
        return total

    def map_coefficients(self, fn, ring: PolynomialRing) -> "Poly":
        """Apply ``fn`` to every coefficient, landing in ``ring`` (same variables)."""
        out = {}
        for k, c in self.terms.items():
            v = fn(c)
            if v:
                out[k] = v
        return Poly(ring, out)


# ---------------------------------------------------------------------------
# text format

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


class _Lexer:
    def __init__(self, text):
        self.text = text
        self.toks = []
        pos = 0
        n = len(text)
        while True:
            while pos < n and text[pos].isspace():
                pos += 1
            if pos >= n:
                break
            m = _TOKEN.match(text, pos)
            if m.group(1) is not None:
                self.toks.append(("num", m.group(1), m.start(1)))
            elif m.group(2) is not None:
                self.toks.append(("name", m.group(2), m.start(2)))
            elif m.group(3) is not None:
                self.toks.append(("op", m.group(3), m.start(3)))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else ("end", "", len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, kind, what):
        tok = self.take()
        if tok[0] != kind:
            found = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {what}, found {found}", tok[2])
        return tok


def parse(ring: PolynomialRing, text: str) -> Poly:
    """Parse ``text`` into an element of ``ring``.

    Grammar::

        polynomial := [sign] term (sign term)*
        term       := coefficient ('*' factor)* | factor ('*' factor)*
        factor     := variable ['^' positive-integer]
        coefficient:= integer ['/' positive-integer]
    """
    known = set(ring.all_variables())
    lex = _Lexer(text)
    total = ring.zero
    first = True
    while True:
        kind, val, pos = lex.peek()
        negative = False
        if kind == "op" and val in "+-":
            lex.take()
            negative = val == "-"
        elif not first:
            if kind == "end":
                break
            raise ParseError(f"expected '+' or '-', found {val!r}", pos)
        first = False
        term_pos = lex.peek()[2]
        kind, val, pos = lex.peek()
        num, den = 1, None
        powers = {}
        if kind == "num":
            lex.take()
            num = int(val)
            if lex.peek()[:2] == ("op", "/"):
                lex.take()
                num_tok = lex.expect("num", "denominator")
                den = int(num_tok[1])
                if den == 0:
                    raise ParseError("zero denominator", num_tok[2])
        else:
            _factor(lex, known, powers)
        while lex.peek()[:2] == ("op", "*"):
            lex.take()
            _factor(lex, known, powers)
        scalar = ring.parse_scalar(-num if negative else num, den, term_pos)
        total = total + ring.from_flat(scalar, powers, term_pos)
        if lex.peek()[0] == "end":
            break
    return total


def _factor(lex, known, powers):
    _, name, pos = lex.expect("name", "variable")
    if name not in known:
        raise ParseError(f"unknown variable {name!r}", pos)
    e = 1
    if lex.peek()[:2] == ("op", "^"):
        lex.take()
        _, val, epos = lex.expect("num", "exponent")
        e = int(val)
        if e < 1:
            raise ParseError("exponent must be positive", epos)
    powers[name] = powers.get(name, 0) + e


_LATEX_NAME = re.compile(r"([TP])(\d+)\Z")


def _latex_var(name):
    m = _LATEX_NAME.match(name)
    if m:
        return ("\\Theta" if m.group(1) == "T" else "\\Phi") + "_{" + m.group(2) + "}"
    return name


def format_poly(p: Poly, style: str = "plain") -> str:
    """Render ``p``; ``style`` is ``"plain"`` (parseable) or ``"latex"``."""
    if style not in ("plain", "latex"):
        raise ValueError(f"unknown style {style!r}")
    scalars = p.ring.scalar_ring()
    parts = []
    for scalar, powers in p.ring.flat_terms(p):
        sign = scalars.scalar_sign(scalar)
        coeff = scalars.format_scalar(scalar, style)
        if style == "plain":
            factors = [f"{n}^{e}" if e > 1 else n for n, e in powers]
            if coeff != "1" or not factors:
                factors.insert(0, coeff)
            body = "*".join(factors)
        else:
            factors = [_latex_var(n) + (f"^{{{e}}}" if e > 1 else "") for n, e in powers]
            if coeff != "1" or not factors:
                factors.insert(0, coeff)
            body = " ".join(factors)
        if not parts:
            parts.append(("-" if sign < 0 else "") + body)
        else:
            parts.append((" - " if sign < 0 else " + ") + body)
    return "".join(parts) if parts else "0"
