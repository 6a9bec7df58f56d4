"""Compare the compiled and numpy row-reduction kernels.

    python benchmarks/bench_ffmat.py [--sizes 100 200 400] [--p 3 7] [--repeat 3]

Also times one real workload: the bar-complex blocks behind dim H^3(A_3, k).
"""
import argparse
import time

import numpy as np

from skewcoh.algebras import build_A
from skewcoh.barcoh import BarComplex
from skewcoh.ffmat import available_backends
from skewcoh.ffmat.kernels import dense_rref_inplace


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench_random(sizes, primes, repeat, backends):
    rng = np.random.default_rng(0)
    print(f"{'n':>6} {'p':>3} " + " ".join(f"{b:>10}" for b in backends) + "   (seconds, best of %d)" % repeat)
    for n in sizes:
        for p in primes:
            a = rng.integers(0, p, size=(n, n), dtype=np.int64)
            row = []
            ranks = set()
            for b in backends:
                def run(b=b):
                    work = np.ascontiguousarray(a.copy())
                    ranks.add(dense_rref_inplace(work, p, backend=b)[0])
                row.append(best_of(run, repeat))
            assert len(ranks) == 1, "backends disagree"
            print(f"{n:>6} {p:>3} " + " ".join(f"{t:>10.4f}" for t in row))


def bench_bar(repeat, backends):
    A = build_A(3)
    print("\nbar blocks of d: C^3 -> C^4 for A_3")
    for b in backends:
        def run(b=b):
            bar = BarComplex(A)
            for t in bar.degrees(3):
                m = bar.matrix(3, t).to_dense()
                dense_rref_inplace(np.ascontiguousarray(m), 3, backend=b)
        print(f"  {b:>8}: {best_of(run, repeat):.4f} s")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[100, 200, 400])
    ap.add_argument("--p", type=int, nargs="+", default=[3, 7])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = available_backends()
    if "cython" not in backends:
        print("compiled kernel not built; timing the numpy fallback only")
    bench_random(args.sizes, args.p, args.repeat, backends)
    bench_bar(args.repeat, backends)


if __name__ == "__main__":
    main()
