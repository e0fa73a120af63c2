"""Pure-Python coefficient kernels.

Every kernel works on plain lists of Python ints and returns a new list
(except ``factor_apply``, which updates in place).  The compiled module
``qmatch._kernels`` exposes the same functions with the same semantics;
``qmatch.kernels`` picks one of the two at import time.

Inner loops lean on ``sum(map(mul, ...))``, ``zip`` comprehensions and
``itertools.accumulate`` so that the per-coefficient work runs in C even
without the extension.
"""

from itertools import accumulate
from operator import mul

BACKEND = "python"


def mul_dense(a, b, n):
    """Schoolbook Cauchy product of ``a`` and ``b``, first ``n`` terms."""
    a = a[:n]
    b = b[:n]
    la, lb = len(a), len(b)
    if not la or not lb:
        return [0] * n
    out = [0] * n
    top = min(n, la + lb - 1)
    for i in range(top):
        lo = i - lb + 1 if i >= lb else 0
        hi = i if i < la else la - 1
        # a[lo..hi] against b[i-lo .. i-hi] (descending)
        if i - hi == 0:
            bs = b[i - lo::-1]
        else:
            bs = b[i - lo:i - hi - 1:-1]
        out[i] = sum(map(mul, a[lo:hi + 1], bs))
    return out


def mul_sparse(a, terms, n):
    """Product of dense ``a`` with the sparse series ``terms`` = [(k, v), ...]."""
    out = [0] * n
    a = a[:n]
    for k, v in terms:
        if k >= n:
            continue
        seg = a[:n - k]
        if not seg:
            continue
        stop = k + len(seg)
        if v == 1:
            out[k:stop] = [x + y for x, y in zip(out[k:stop], seg)]
        elif v == -1:
            out[k:stop] = [x - y for x, y in zip(out[k:stop], seg)]
        else:
            out[k:stop] = [x + v * y for x, y in zip(out[k:stop], seg)]
    return out


def div_dense(a, b, n):
    """Quotient ``a / b`` to ``n`` terms; ``b[0]`` must be +1 or -1."""
    b0 = b[0]
    b = b[:n]
    lb = len(b)
    c = [0] * n
    la = len(a)
    for i in range(n):
        s = a[i] if i < la else 0
        hi = i if i < lb else lb - 1
        if hi >= 1:
            # b[1..hi] against c[i-1 .. i-hi]
            if i - hi == 0:
                cs = c[i - 1::-1]
            else:
                cs = c[i - 1:i - hi - 1:-1]
            s -= sum(map(mul, b[1:hi + 1], cs))
        c[i] = s if b0 == 1 else -s
    return c


def div_sparse(a, terms, n):
    """Quotient ``a / b`` to ``n`` terms, ``b`` given as sparse ``terms``.

    ``terms`` must start with ``(0, b0)`` where ``b0`` is +1 or -1.
    """
    b0 = terms[0][1]
    rest = terms[1:]
    plus = [k for k, v in rest if v == 1]
    minus = [k for k, v in rest if v == -1]
    other = [(k, v) for k, v in rest if v != 1 and v != -1]
    c = [0] * n
    la = len(a)
    np_ = nm = 0
    lp, lm = len(plus), len(minus)
    for i in range(n):
        s = a[i] if i < la else 0
        while np_ < lp and plus[np_] <= i:
            np_ += 1
        while nm < lm and minus[nm] <= i:
            nm += 1
        if np_:
            s -= sum([c[i - k] for k in plus[:np_]])
        if nm:
            s += sum([c[i - k] for k in minus[:nm]])
        for k, v in other:
            if k <= i:
                s -= v * c[i - k]
        c[i] = s if b0 == 1 else -s
    return c


def pow_terms(terms, e, n):
    """``b**e`` to ``n`` terms from the nonzero ``terms`` of ``b``.

    Uses the power recurrence
    ``n*b0*c[n] = sum_k ((e+1)*k - n) * b[k] * c[n-k]``; every division is
    exact whenever the result has integer coefficients.
    """
    k0, b0 = terms[0]
    if k0 != 0:
        raise ValueError("pow_terms needs a nonzero constant term")
    c = [0] * n
    if n == 0:
        return c
    c[0] = b0 ** e if e >= 0 else (1 if b0 == 1 else (-1) ** (-e))
    rest = terms[1:]
    e1 = e + 1
    for i in range(1, n):
        s = 0
        for k, v in rest:
            if k > i:
                break
            s += (e1 * k - i) * v * c[i - k]
        d = i * b0
        q, r = divmod(s, d)
        if r:
            raise ArithmeticError("non-integral coefficient in power recurrence")
        c[i] = q
    return c


def factor_apply(c, k, e):
    """Multiply ``c`` in place by ``(1 - q**k)**e`` (``e`` may be negative)."""
    n = len(c)
    if k >= n or e == 0:
        return
    if e > 0:
        for _ in range(e):
            # new c[i] = c[i] - old c[i-k]; the comprehension reads old values
            c[k:] = [x - y for x, y in zip(c[k:], c)]
        return
    for _ in range(-e):
        if k * k <= n:
            for r in range(k):
                c[r::k] = list(accumulate(c[r::k]))
        else:
            for start in range(k, n, k):
                stop = min(start + k, n)
                c[start:stop] = [x + y for x, y in zip(c[start:stop], c[start - k:stop - k])]
