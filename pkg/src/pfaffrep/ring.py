"""Commutative rings with 1.

Elements are plain Python objects that support ``+``, unary and binary
``-``, ``*``, ``==`` and truthiness (false exactly for zero):

* integers   -> ``int``
* rationals  -> ``fractions.Fraction``
* ``Z/nZ``   -> :class:`Mod`
* polynomial -> :class:`pfaffrep.polynomial.Poly`

Rings never provide division. Every algorithm built on top of them is
division-free, so results hold over any commutative ring with 1.
"""
from __future__ import annotations

import re
from collections import namedtuple
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidRing, ParseError, RingMismatch

RingOps = namedtuple("RingOps", "zero one add neg mul eq embed_integer")

_INT_RE = re.compile(r"\s*([+-]?\d+)\s*\Z")
_FRAC_RE = re.compile(r"\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?\Z")


class Ring:
    """Interface every ring descriptor implements."""

    variables: tuple = ()

    @property
    def zero(self):
        return self.embed_integer(0)

    @property
    def one(self):
        return self.embed_integer(1)

    def embed_integer(self, k: int):
        raise NotImplementedError

    def is_element(self, a) -> bool:
        raise NotImplementedError

    def canonical(self, a):
        raise NotImplementedError

    def coerce(self, a):
        """``a`` as an element of this ring; plain ints are embedded."""
        if self.is_element(a):
            return a
        if type(a) is int:
            return self.embed_integer(a)
        raise RingMismatch(f"{a!r} is not an element of {self.spec()}")

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def eq(self, a, b) -> bool:
        return a == b

    def power(self, a, e: int):
        result = self.one
        while e:
            if e & 1:
                result = result * a
            e >>= 1
            if e:
                a = a * a
        return result

    def ops(self) -> RingOps:
        return RingOps(self.zero, self.one, self.add, self.neg, self.mul,
                       self.eq, self.embed_integer)

    def all_variables(self) -> tuple:
        """Variable names of this ring and of every ring it is built on."""
        return ()

    def parse_element(self, text: str):
        raise NotImplementedError

    def format_element(self, a, style: str = "plain") -> str:
        raise NotImplementedError

    def random_element(self, rng):
        raise NotImplementedError

    # hooks used by the flat polynomial text format
    def scalar_ring(self) -> "Ring":
        return self

    def parse_scalar(self, num: int, den: int | None, position: int):
        if den is not None:
            raise ParseError(f"fractions are not elements of {self.spec()}",
                             position)
        return self.embed_integer(num)

    def from_flat(self, scalar, powers: dict, position: int = 0):
        if powers:
            name = next(iter(powers))
            raise ParseError(f"unknown variable {name!r}", position)
        return scalar

    def flat_terms(self, a):
        """Yield ``(scalar, ((name, exp), ...))`` pairs of ``a`` in print order."""
        if a:
            yield a, ()

    def scalar_sign(self, c) -> int:
        return 1

    def format_scalar(self, c, style: str = "plain") -> str:
        return self.format_element(c, style)

    def spec(self) -> str:
        raise NotImplementedError

    def __str__(self):
        return self.spec()


@dataclass(frozen=True)
class Integers(Ring):
    def embed_integer(self, k):
        return int(k)

    def is_element(self, a):
        return type(a) is int

    def canonical(self, a):
        return int(a)

    def parse_element(self, text):
        m = _INT_RE.match(text)
        if not m:
            raise ParseError(f"not an integer: {text!r}", 0)
        return int(m.group(1))

    def format_element(self, a, style="plain"):
        return str(a)

    def random_element(self, rng):
        return rng.randint(-10, 10)

    def scalar_sign(self, c):
        return -1 if c < 0 else 1

    def format_scalar(self, c, style="plain"):
        return str(abs(c))

    def spec(self):
        return "int"


@dataclass(frozen=True)
class Rationals(Ring):
    def embed_integer(self, k):
        return Fraction(k)

    def is_element(self, a):
        return isinstance(a, Fraction)

    def canonical(self, a):
        return Fraction(a)

    def parse_element(self, text):
        m = _FRAC_RE.match(text)
        if not m:
            raise ParseError(f"not a rational: {text!r}", 0)
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise ParseError("zero denominator", text.index("/") + 1)
        return Fraction(int(m.group(1)), den)

    def format_element(self, a, style="plain"):
        if a.denominator == 1:
            return str(a.numerator)
        if style == "latex":
            sign = "-" if a < 0 else ""
            return f"{sign}\\frac{{{abs(a.numerator)}}}{{{a.denominator}}}"
        return f"{a.numerator}/{a.denominator}"

    def random_element(self, rng):
        return Fraction(rng.randint(-10, 10), rng.randint(1, 10))

    def parse_scalar(self, num, den, position):
        if den == 0:
            raise ParseError("zero denominator", position)
        return Fraction(num, 1 if den is None else den)

    def scalar_sign(self, c):
        return -1 if c < 0 else 1

    def format_scalar(self, c, style="plain"):
        return self.format_element(abs(c), style)

    def spec(self):
        return "rat"


class Mod:
    """Residue class modulo ``n``, stored reduced to ``[0, n)``."""

    __slots__ = ("value", "n")

    def __init__(self, value: int, n: int):
        self.value = value % n
        self.n = n

    def _check(self, other):
        if type(other) is Mod:
            if other.n != self.n:
                raise RingMismatch(f"Z/{self.n} vs Z/{other.n}")
            return other.value
        if type(other) is int:
            return other
        return None

    def __add__(self, other):
        v = self._check(other)
        if v is None:
            return NotImplemented
        return Mod(self.value + v, self.n)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._check(other)
        if v is None:
            return NotImplemented
        return Mod(self.value - v, self.n)

    def __rsub__(self, other):
        v = self._check(other)
        if v is None:
            return NotImplemented
        return Mod(v - self.value, self.n)

    def __mul__(self, other):
        v = self._check(other)
        if v is None:
            return NotImplemented
        return Mod(self.value * v, self.n)

    __rmul__ = __mul__

    def __neg__(self):
        return Mod(-self.value, self.n)

    def __pow__(self, e):
        return Mod(pow(self.value, e, self.n), self.n)

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if type(other) is Mod:
            return self.n == other.n and self.value == other.value
        if type(other) is int:
            return (other - self.value) % self.n == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.n))

    def __repr__(self):
        return f"Mod({self.value}, {self.n})"

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class IntegersMod(Ring):
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise InvalidRing(f"modulus must be an integer >= 2, got {self.n!r}")

    def embed_integer(self, k):
        return Mod(k, self.n)

    def is_element(self, a):
        return type(a) is Mod and a.n == self.n

    def canonical(self, a):
        return Mod(a.value if type(a) is Mod else a, self.n)

    def power(self, a, e):
        return a ** e

    def parse_element(self, text):
        m = _INT_RE.match(text)
        if not m:
            raise ParseError(f"not an integer residue: {text!r}", 0)
        return Mod(int(m.group(1)), self.n)

    def format_element(self, a, style="plain"):
        return str(a.value)

    def random_element(self, rng):
        return Mod(rng.randrange(self.n), self.n)

    def spec(self):
        return f"mod:{self.n}"


ZZ = Integers()
QQ = Rationals()

_VAR_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def _split_layers(text: str):
    base, _, rest = text.partition("[")
    layers = []
    if rest:
        for chunk in ("[" + rest).split("]")[:-1]:
            if not chunk.startswith("["):
                raise InvalidRing(f"malformed ring spec {text!r}")
            layers.append([v.strip() for v in chunk[1:].split(",")])
        if not text.endswith("]"):
            raise InvalidRing(f"malformed ring spec {text!r}")
    return base.strip(), layers


def make_ring(spec) -> Ring:
    """Build a ring descriptor.

    ``spec`` may be a :class:`Ring` (returned unchanged), a string such as
    ``"int"``, ``"rat"``, ``"mod:6"`` or ``"int[T1,T2][x,y,z]"`` (each bracket
    group adds a polynomial layer), or a dict
    ``{"kind": "integers" | "rationals" | "modular" | "polynomial", ...}``.
    """
    from .polynomial import PolynomialRing

    if isinstance(spec, Ring):
        return spec
    if isinstance(spec, dict):
        kind = spec.get("kind")
        if kind == "integers":
            return ZZ
        if kind == "rationals":
            return QQ
        if kind == "modular":
            return IntegersMod(spec.get("n"))
        if kind == "polynomial":
            return PolynomialRing(make_ring(spec["base"]), tuple(spec["variables"]))
        raise InvalidRing(f"unknown ring kind {kind!r}")
    if not isinstance(spec, str):
        raise InvalidRing(f"cannot build a ring from {spec!r}")
    base_text, layers = _split_layers(spec)
    if base_text in ("int", "integers", "ZZ"):
        ring = ZZ
    elif base_text in ("rat", "rationals", "QQ"):
        ring = QQ
    elif base_text.startswith("mod:"):
        try:
            n = int(base_text[4:])
        except ValueError:
            raise InvalidRing(f"bad modulus in {spec!r}") from None
        ring = IntegersMod(n)
    else:
        raise InvalidRing(f"unknown ring {spec!r}")
    for names in layers:
        ring = PolynomialRing(ring, tuple(names))
    return ring


def ring_ops(ring: Ring) -> RingOps:
    """The arithmetic bundle ``(zero, one, add, neg, mul, eq, embed_integer)``."""
    return make_ring(ring).ops()


def check_variable_names(names, base: Ring):
    if not names:
        raise InvalidRing("a polynomial ring needs at least one variable")
    for name in names:
        if not isinstance(name, str) or not _VAR_RE.match(name):
            raise InvalidRing(f"invalid variable name {name!r}")
    if len(set(names)) != len(names):
        raise InvalidRing(f"duplicate variable names in {names!r}")
    clash = set(names) & set(base.all_variables())
    if clash:
        raise InvalidRing(f"variables {sorted(clash)} already used by the coefficient ring")
