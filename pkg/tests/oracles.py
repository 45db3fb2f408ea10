"""Independent reference computations used only by the tests.

None of these share code paths with the library kernels.
"""
from itertools import permutations

import sympy

from pfaffrep.pfaffian import delete_rows_cols


def pfaffian_recursive(a):
    """Direct row-1 recursion on explicit submatrices, no memoization."""
    if a.size == 0:
        return a.ring.one
    total = a.ring.zero
    for j in range(2, a.size + 1):
        entry = a.entry(1, j)
        if not entry:
            continue
        sub = pfaffian_recursive(delete_rows_cols(a, 1, j))
        total = total + entry * sub if j % 2 == 0 else total - entry * sub
    return total


def _matchings(idx):
    if not idx:
        yield []
        return
    first, rest = idx[0], idx[1:]
    for k, partner in enumerate(rest):
        for m in _matchings(rest[:k] + rest[k + 1:]):
            yield [(first, partner)] + m


def _perm_sign(seq):
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        while seq[i] != i:
            j = seq[i]
            seq[i], seq[j] = seq[j], seq[i]
            sign = -sign
    return sign


def pfaffian_matchings(rows):
    """Sum over perfect matchings of sign * product, on a dense 0-based matrix of ints."""
    n = len(rows)
    total = 0
    for m in _matchings(list(range(n))):
        perm = [v for pair in m for v in pair]
        prod = 1
        for i, j in m:
            prod *= rows[i][j]
        total += _perm_sign(perm) * prod
    return total


def determinant_leibniz(rows):
    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        prod = 1
        for i in range(n):
            prod *= rows[i][perm[i]]
            if not prod:
                break
        total += _perm_sign(perm) * prod
    return total


def to_sympy(p):
    """Rebuild a (possibly nested) polynomial as a sympy expression from its printed terms."""
    expr = sympy.Integer(0)
    for scalar, powers in p.ring.flat_terms(p):
        term = sympy.Rational(scalar) if not hasattr(scalar, "n") else sympy.Integer(scalar.value)
        for name, e in powers:
            term *= sympy.Symbol(name) ** e
        expr += term
    return sympy.expand(expr)
