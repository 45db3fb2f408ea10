# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the functions in ``_pykernels``; same contracts."""


def add_terms(dict a, dict b):
    cdef dict out
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


def sub_terms(dict a, dict b):
    cdef dict out = dict(a)
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


def neg_terms(dict a):
    return {k: -v for k, v in a.items()}


def scale_terms(dict a, c):
    cdef dict out = {}
    for k, v in a.items():
        p = v * c
        if p:
            out[k] = p
    return out


def mul_terms(dict a, dict b):
    cdef dict out = {}
    cdef list akeys, avals, bkeys, bvals
    cdef Py_ssize_t i, j, na, nb
    if len(a) > len(b):
        a, b = b, a
    akeys = list(a.keys())
    avals = list(a.values())
    bkeys = list(b.keys())
    bvals = list(b.values())
    na = len(akeys)
    nb = len(bkeys)
    for i in range(na):
        ka = akeys[i]
        va = avals[i]
        for j in range(nb):
            k = ka + bkeys[j]
            prev = out.get(k)
            if prev is None:
                out[k] = va * bvals[j]
            else:
                out[k] = prev + va * bvals[j]
    return {k: v for k, v in out.items() if v}


cdef inline int _lowbit(unsigned long long m):
    cdef int i = 0
    while not (m & 1):
        m >>= 1
        i += 1
    return i


cdef object _pf(unsigned long long mask, list rows, list memo, object zero):
    cdef object hit = memo[mask]
    if hit is not None:
        return hit
    cdef int i = _lowbit(mask)
    cdef list row = rows[i]
    cdef unsigned long long rest = mask & ~(1ULL << i)
    cdef unsigned long long m = rest
    cdef unsigned long long bit
    cdef bint plus = True
    cdef object total = zero
    cdef object a, sub
    while m:
        bit = m & (~m + 1)
        a = row[_lowbit(bit)]
        if a:
            sub = _pf(rest & ~bit, rows, memo, zero)
            if sub:
                if plus:
                    total = total + a * sub
                else:
                    total = total - a * sub
        plus = not plus
        m ^= bit
    memo[mask] = total
    return total


def pfaffian(list rows, int n, zero, one):
    if n % 2:
        return zero
    if n > 26:
        from . import _pykernels
        return _pykernels.pfaffian(rows, n, zero, one)
    cdef list memo = [None] * (1 << n)
    memo[0] = one
    return _pf((1ULL << n) - 1, rows, memo, zero)


cdef object _det(unsigned long long mask, int r, int n, list rows, list memo,
                 object zero):
    cdef object hit = memo[mask]
    if hit is not None:
        return hit
    cdef list row = rows[r]
    cdef object total = zero
    cdef object a, sub
    cdef bint plus = True
    cdef int c
    cdef unsigned long long bit
    for c in range(n):
        bit = 1ULL << c
        if mask & bit:
            continue
        a = row[c]
        if a:
            sub = _det(mask | bit, r + 1, n, rows, memo, zero)
            if sub:
                if plus:
                    total = total + a * sub
                else:
                    total = total - a * sub
        plus = not plus
    memo[mask] = total
    return total


def determinant(list rows, int n, zero, one):
    if n > 26:
        from . import _pykernels
        return _pykernels.determinant(rows, n, zero, one)
    cdef list memo = [None] * (1 << n)
    memo[(1 << n) - 1] = one
    return _det(0, 0, n, rows, memo, zero)
