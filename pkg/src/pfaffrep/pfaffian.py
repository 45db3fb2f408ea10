"""Skew-symmetric matrices, Pfaffians and division-free determinants.

Indices are 1-based throughout the public API, matching how matrices are
usually written down.
"""
from __future__ import annotations

import json

from . import kernels as _k
from .errors import RingMismatch, ShapeError
from .ring import Ring, make_ring


class SkewMatrix:
    """A ``size x size`` skew-symmetric matrix stored as its strict upper triangle.

    ``entry(j, i)`` is ``-entry(i, j)`` and the diagonal is zero, which keeps
    the matrix alternating in every characteristic.
    """

    __slots__ = ("ring", "size", "upper")

    def __init__(self, ring: Ring, size: int, upper: dict):
        self.ring = ring
        self.size = size
        self.upper = upper

    def entry(self, i: int, j: int):
        if not (1 <= i <= self.size and 1 <= j <= self.size):
            raise IndexError(f"({i}, {j}) outside a {self.size}x{self.size} matrix")
        if i == j:
            return self.ring.zero
        if i < j:
            return self.upper.get((i, j), self.ring.zero)
        return -self.upper.get((j, i), self.ring.zero)

    def rows(self) -> list:
        """Dense 0-based rows (full matrix)."""
        zero = self.ring.zero
        n = self.size
        out = [[zero] * n for _ in range(n)]
        for (i, j), v in self.upper.items():
            out[i - 1][j - 1] = v
            out[j - 1][i - 1] = -v
        return out

    def items(self):
        """Nonzero strict-upper entries ``(i, j, value)`` in row-major order."""
        return [(i, j, self.upper[i, j]) for i, j in sorted(self.upper)]

    def map(self, fn, ring: Ring | None = None) -> "SkewMatrix":
        ring = self.ring if ring is None else ring
        out = {}
        for key, v in self.upper.items():
            w = fn(v)
            if w:
                out[key] = w
        return SkewMatrix(ring, self.size, out)

    def scale(self, c) -> "SkewMatrix":
        return self.map(lambda v: v * c)

    def __add__(self, other):
        if not isinstance(other, SkewMatrix):
            return NotImplemented
        if other.size != self.size:
            raise ShapeError("size mismatch")
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring.spec()} vs {other.ring.spec()}")
        out = dict(self.upper)
        for key, v in other.upper.items():
            s = out[key] + v if key in out else v
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return SkewMatrix(self.ring, self.size, out)

    def __eq__(self, other):
        return (isinstance(other, SkewMatrix) and self.size == other.size
                and self.ring == other.ring and self.upper == other.upper)

    def __repr__(self):
        return f"SkewMatrix(size={self.size}, ring={self.ring.spec()!r}, nnz={len(self.upper)})"

    def to_json(self) -> dict:
        fmt = self.ring.format_element
        return {"size": self.size,
                "entries": [[i, j, fmt(v)] for i, j, v in self.items()]}

    @classmethod
    def from_json(cls, ring, doc) -> "SkewMatrix":
        ring = make_ring(ring)
        if isinstance(doc, str):
            doc = json.loads(doc)
        try:
            size = doc["size"]
            raw = doc["entries"]
        except (KeyError, TypeError):
            raise ShapeError("matrix document needs 'size' and 'entries'") from None
        if not isinstance(size, int) or isinstance(size, bool):
            raise ShapeError(f"size must be an integer, got {size!r}")
        entries = []
        for item in raw:
            if not (isinstance(item, list) and len(item) == 3):
                raise ShapeError(f"entry must be [i, j, text], got {item!r}")
            i, j, text = item
            entries.append((i, j, ring.parse_element(str(text))))
        return skew_from_upper(ring, size, entries)


class SquareMatrix:
    """Dense square matrix over a ring (rows are tuples)."""

    __slots__ = ("ring", "size", "rows")

    def __init__(self, ring: Ring, rows):
        rows = tuple(tuple(r) for r in rows)
        if any(len(r) != len(rows) for r in rows):
            raise ShapeError("matrix is not square")
        self.ring = ring
        self.size = len(rows)
        self.rows = rows

    @classmethod
    def identity(cls, ring, n):
        zero, one = ring.zero, ring.one
        return cls(ring, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, ring, values):
        n = len(values)
        zero = ring.zero
        return cls(ring, [[values[i] if i == j else zero for j in range(n)] for i in range(n)])

    def transpose(self):
        return SquareMatrix(self.ring, zip(*self.rows))

    def __matmul__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        if other.size != self.size:
            raise ShapeError("size mismatch")
        return SquareMatrix(self.ring, _matmul(self.rows, other.rows, self.ring.zero))

    def __eq__(self, other):
        return isinstance(other, SquareMatrix) and self.rows == other.rows

    def __repr__(self):
        return f"SquareMatrix({self.size}x{self.size}, ring={self.ring.spec()!r})"


def _matmul(a, b, zero):
    n = len(a)
    cols = list(zip(*b))
    out = []
    for i in range(n):
        row = a[i]
        new = []
        for j in range(n):
            col = cols[j]
            s = zero
            for k in range(n):
                if row[k] and col[k]:
                    s = s + row[k] * col[k]
            new.append(s)
        out.append(new)
    return out


def skew_from_upper(ring: Ring, size: int, entries) -> SkewMatrix:
    """Build a skew matrix from ``(i, j, value)`` with ``1 <= i < j <= size``."""
    if not isinstance(size, int) or size < 0 or size % 2:
        raise ShapeError(f"skew matrix size must be even, got {size!r}")
    upper = {}
    for i, j, v in entries:
        if not (isinstance(i, int) and isinstance(j, int) and 1 <= i < j <= size):
            raise IndexError(f"({i}, {j}) is not a strict-upper position of a {size}x{size} matrix")
        if (i, j) in upper:
            raise IndexError(f"duplicate entry ({i}, {j})")
        v = ring.coerce(v)
        upper[(i, j)] = v
    return SkewMatrix(ring, size, {k: v for k, v in upper.items() if v})


def delete_rows_cols(a: SkewMatrix, i: int, j: int) -> SkewMatrix:
    """Remove rows and columns ``i`` and ``j``; survivors keep their order."""
    n = a.size
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"cannot delete ({i}, {j}) from a {n}x{n} matrix")
    keep = [k for k in range(1, n + 1) if k != i and k != j]
    new_index = {old: new for new, old in enumerate(keep, 1)}
    upper = {(new_index[p], new_index[q]): v for (p, q), v in a.upper.items()
             if p in new_index and q in new_index}
    return SkewMatrix(a.ring, n - 2, upper)


def pfaffian(a: SkewMatrix):
    """Pfaffian by expansion along the first surviving row.

    ``Pf(A) = sum_j (-1)^j a_{1j} Pf(A without rows/cols 1, j)``, with the
    Pfaffian of the empty matrix equal to one. Subproblems are memoized on
    the set of surviving indices, so at most ``2^size`` of them are expanded.
    """
    ring = a.ring
    return _k.pfaffian(a.rows(), a.size, ring.zero, ring.one)


def determinant(a):
    """Division-free determinant (Laplace expansion memoized on column subsets)."""
    ring = a.ring
    rows = a.rows() if isinstance(a, SkewMatrix) else [list(r) for r in a.rows]
    return _k.determinant(rows, a.size, ring.zero, ring.one)


def congruence(x: SquareMatrix, a: SkewMatrix) -> SkewMatrix:
    """``X A X^t`` as a skew matrix."""
    if x.size != a.size:
        raise ShapeError(f"X is {x.size}x{x.size} but A is {a.size}x{a.size}")
    if x.ring != a.ring:
        raise RingMismatch(f"{x.ring.spec()} vs {a.ring.spec()}")
    zero = a.ring.zero
    xa = _matmul(x.rows, a.rows(), zero)
    prod = _matmul(xa, x.transpose().rows, zero)
    n = a.size
    if any(prod[i][i] for i in range(n)):
        raise AssertionError("X A X^t has a nonzero diagonal entry")
    upper = {(i + 1, j + 1): prod[i][j] for i in range(n) for j in range(i + 1, n) if prod[i][j]}
    return SkewMatrix(a.ring, n, upper)
