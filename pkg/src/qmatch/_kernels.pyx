# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled coefficient kernels (same contract as ``qmatch._pykernels``).

Coefficients stay Python ints (arbitrary precision); the gain comes from
running the index arithmetic and loop control in C.
"""

BACKEND = "cython"


def mul_dense(list a, list b, Py_ssize_t n):
    cdef Py_ssize_t la = min(len(a), n), lb = min(len(b), n)
    cdef Py_ssize_t i, j, lo, hi, top
    cdef list out = [0] * n
    cdef object s
    if la == 0 or lb == 0:
        return out
    top = min(n, la + lb - 1)
    for i in range(top):
        lo = i - lb + 1 if i >= lb else 0
        hi = i if i < la else la - 1
        s = 0
        for j in range(lo, hi + 1):
            s = s + a[j] * b[i - j]
        out[i] = s
    return out


def mul_sparse(list a, list terms, Py_ssize_t n):
    cdef list out = [0] * n
    cdef Py_ssize_t la = min(len(a), n), i, k, stop
    cdef object v
    for t in terms:
        k = t[0]
        v = t[1]
        if k >= n:
            continue
        stop = min(n, k + la)
        if v == 1:
            for i in range(k, stop):
                out[i] = out[i] + a[i - k]
        elif v == -1:
            for i in range(k, stop):
                out[i] = out[i] - a[i - k]
        else:
            for i in range(k, stop):
                out[i] = out[i] + v * a[i - k]
    return out


def div_dense(list a, list b, Py_ssize_t n):
    cdef Py_ssize_t la = len(a), lb = min(len(b), n), i, j, hi
    cdef list c = [0] * n
    cdef object s
    cdef bint neg = b[0] == -1
    for i in range(n):
        s = a[i] if i < la else 0
        hi = i if i < lb else lb - 1
        for j in range(1, hi + 1):
            s = s - b[j] * c[i - j]
        c[i] = -s if neg else s
    return c


def div_sparse(list a, list terms, Py_ssize_t n):
    cdef Py_ssize_t la = len(a), nt = len(terms), i, t, k
    cdef list c = [0] * n
    cdef list ks = [p[0] for p in terms]
    cdef list vs = [p[1] for p in terms]
    cdef bint neg = vs[0] == -1
    cdef object s, v
    for i in range(n):
        s = a[i] if i < la else 0
        for t in range(1, nt):
            k = ks[t]
            if k > i:
                break
            v = vs[t]
            if v == 1:
                s = s - c[i - k]
            elif v == -1:
                s = s + c[i - k]
            else:
                s = s - v * c[i - k]
        c[i] = -s if neg else s
    return c


def pow_terms(list terms, long e, Py_ssize_t n):
    cdef Py_ssize_t nt = len(terms), i, t, k
    cdef list c = [0] * n
    cdef object b0, s, d, q, r
    if terms[0][0] != 0:
        raise ValueError("pow_terms needs a nonzero constant term")
    if n == 0:
        return c
    b0 = terms[0][1]
    c[0] = b0 ** e if e >= 0 else (1 if b0 == 1 else (-1) ** (-e))
    cdef list ks = [p[0] for p in terms]
    cdef list vs = [p[1] for p in terms]
    for i in range(1, n):
        s = 0
        for t in range(1, nt):
            k = ks[t]
            if k > i:
                break
            s = s + ((e + 1) * k - i) * vs[t] * c[i - k]
        d = i * b0
        q, r = divmod(s, d)
        if r:
            raise ArithmeticError("non-integral coefficient in power recurrence")
        c[i] = q
    return c


def factor_apply(list c, Py_ssize_t k, long e):
    cdef Py_ssize_t n = len(c), i
    cdef long rep
    if k >= n or e == 0:
        return
    if e > 0:
        for rep in range(e):
            for i in range(n - 1, k - 1, -1):
                c[i] = c[i] - c[i - k]
    else:
        for rep in range(-e):
            for i in range(k, n):
                c[i] = c[i] + c[i - k]
