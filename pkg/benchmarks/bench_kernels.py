"""Time the compiled kernels against the pure-Python fallback on the same inputs.

    python3 benchmarks/bench_kernels.py [--n 3000] [--repeat 3]

Both backends must return identical lists; a mismatch aborts the run.
"""

import argparse
import time

from qmatch import _pykernels
from qmatch.products import pentagonal_terms

try:
    from qmatch import _kernels
except ImportError:
    _kernels = None


def _dense_f1(n):
    c = [0] * n
    for k, v in pentagonal_terms(1, n):
        c[k] = v
    return c


def cases(n):
    f1 = _dense_f1(n)
    p = _pykernels.div_sparse([1], list(pentagonal_terms(1, n)), n)  # partition numbers
    sparse = list(pentagonal_terms(1, n))
    yield "mul_dense  f1*p(n)", "mul_dense", (f1, p, n)
    yield "mul_sparse p(n)*f1", "mul_sparse", (p, sparse, n)
    yield "div_dense  1/p(n)", "div_dense", ([1], p, n)
    yield "div_sparse 1/f1", "div_sparse", ([1], sparse, n)
    yield "pow_terms  f1^-24", "pow_terms", (sparse, -24, n)
    yield "factor_apply (q;q)^-1", "factor_apply", (n,)


def _factor_product(impl, n):
    c = [1] + [0] * (n - 1)
    for k in range(1, n):
        impl.factor_apply(c, k, -1)
    return c


def _fn(impl, name):
    if name == "factor_apply":
        return lambda n: _factor_product(impl, n)
    return getattr(impl, name)


def _time(fn, args, repeat):
    best, out = None, None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn(*args)
        dt = time.perf_counter() - t
        best = dt if best is None else min(best, dt)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=3000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _kernels is None:
        print("compiled kernels not built; only the fallback is available")
    print(f"{'kernel':22s} {'python s':>10s} {'cython s':>10s} {'speedup':>8s}")
    for label, name, inputs in cases(args.n):
        tp, rp = _time(_fn(_pykernels, name), inputs, args.repeat)
        if _kernels is None:
            print(f"{label:22s} {tp:10.4f}")
            continue
        tc, rc = _time(_fn(_kernels, name), inputs, args.repeat)
        if rp != rc:
            raise SystemExit(f"{name}: backends disagree")
        print(f"{label:22s} {tp:10.4f} {tc:10.4f} {tp / tc:8.1f}x")

if __name__ == "__main__":
    main()
