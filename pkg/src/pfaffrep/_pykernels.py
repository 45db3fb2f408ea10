"""Pure-Python kernels.

Term maps are ``dict[int, coeff]`` keyed by packed monomials, so monomial
multiplication is integer addition (see ``PolynomialRing.pack``). Matrix
kernels take dense row lists and treat entries as opaque ring elements.
"""


def add_terms(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = dict(a)
    for k, v in b.items():
        prev = out.get(k)
        if prev is None:
            out[k] = v
        else:
            s = prev + v
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def sub_terms(a, b):
    out = dict(a)
    for k, v in b.items():
        prev = out.get(k)
        if prev is None:
            out[k] = -v
        else:
            s = prev - v
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def neg_terms(a):
    return {k: -v for k, v in a.items()}


def scale_terms(a, c):
    out = {}
    for k, v in a.items():
        p = v * c
        if p:
            out[k] = p
    return out


def mul_terms(a, b):
    if len(a) > len(b):
        a, b = b, a
    out = {}
    get = out.get
    bitems = list(b.items())
    for ka, va in a.items():
        for kb, vb in bitems:
            k = ka + kb
            prev = get(k)
            if prev is None:
                out[k] = va * vb
            else:
                out[k] = prev + va * vb
    return {k: v for k, v in out.items() if v}


def pfaffian(rows, n, zero, one):
    """Row-1 expansion memoized on the bitmask of surviving indices."""
    if n % 2:
        return zero
    memo = {0: one}

    def pf(mask):
        hit = memo.get(mask)
        if hit is not None:
            return hit
        low = mask & -mask
        row = rows[low.bit_length() - 1]
        rest = mask ^ low
        total = zero
        plus = True
        m = rest
        while m:
            bit = m & -m
            a = row[bit.bit_length() - 1]
            if a:
                sub = pf(rest ^ bit)
                if sub:
                    if plus:
                        total = total + a * sub
                    else:
                        total = total - a * sub
            plus = not plus
            m ^= bit
        memo[mask] = total
        return total

    return pf((1 << n) - 1)


def determinant(rows, n, zero, one):
    """Row-by-row Laplace expansion memoized on the set of used columns."""
    full = (1 << n) - 1
    memo = {full: one}

    def det(mask, r):
        hit = memo.get(mask)
        if hit is not None:
            return hit
        row = rows[r]
        total = zero
        plus = True
        for c in range(n):
            bit = 1 << c
            if mask & bit:
                continue
            a = row[c]
            if a:
                sub = det(mask | bit, r + 1)
                if sub:
                    if plus:
                        total = total + a * sub
                    else:
                        total = total - a * sub
            plus = not plus
        memo[mask] = total
        return total

    return det(0, 0)
