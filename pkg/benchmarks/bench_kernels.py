"""Timing harness for the modular multiplication kernels.

Compares the pure schoolbook loop, the Kronecker-substitution route, and
the compiled schoolbook extension on square inputs of growing size, then
times one end-to-end nu computation per backend.  The crossover column is
what COMPILED_SCHOOLBOOK_CUTOFF in fptkit.kernels is tuned from: the
compiled loop wins below it, the big-integer route wins above it.

Run from the repository root:

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --sizes 64,256,1024 --repeats 9
"""

import argparse
import random
import statistics
import time

from fptkit.kernels import HAVE_COMPILED, force_backend, pure

try:
    from fptkit.kernels import _speedups
except ImportError:
    _speedups = None


def median_time(fn, repeats):
    times = []
    for _ in range(repeats):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return statistics.median(times)


def bench_polymul(p, sizes, repeats, rng):
    print(f"\npolymul, p = {p}")
    header = f"{'n':>6} {'schoolbook':>12} {'kronecker':>12} {'compiled':>12}  winner"
    print(header)
    print("-" * len(header))
    for n in sizes:
        a = [rng.randrange(p) for _ in range(n)]
        b = [rng.randrange(p) for _ in range(n)]
        cols = {}
        if n <= 2048:  # the pure python loop is hopeless beyond this
            cols["schoolbook"] = median_time(
                lambda: pure.polymul_schoolbook(a, b, p), repeats
            )
        cols["kronecker"] = median_time(
            lambda: pure.polymul_kronecker(a, b, p), repeats
        )
        if _speedups is not None:
            cols["compiled"] = median_time(
                lambda: _speedups.polymul_schoolbook(a, b, p), repeats
            )
        winner = min(cols, key=cols.get)

        def cell(name):
            return f"{cols[name] * 1e3:>10.3f}ms" if name in cols else f"{'-':>12}"

        print(
            f"{n:>6} {cell('schoolbook')} {cell('kronecker')} "
            f"{cell('compiled')}  {winner}"
        )


def bench_nu(repeats):
    from fptkit import LineArrangement, nu
    from fptkit.slopes import INF

    arr = LineArrangement(7, (0, 1, 2, 3, INF), (2, 1, 1, 1, 2))
    print(f"\nend-to-end nu, {arr.describe()}, e = 5 (q = 16807)")
    backends = ["pure"] + (["compiled"] if HAVE_COMPILED else [])
    for name in backends:
        with force_backend(name):
            t = median_time(lambda: nu(arr, 5), repeats)
        print(f"  {name:>9}: {t * 1e3:.1f}ms")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument(
        "--sizes",
        default="16,64,256,1024,4096,16384",
        help="comma-separated square input lengths",
    )
    ap.add_argument("--primes", default="3,32749", help="comma-separated moduli")
    ap.add_argument("--repeats", type=int, default=5)
    ap.add_argument("--seed", type=int, default=20260815)
    args = ap.parse_args()

    sizes = [int(s) for s in args.sizes.split(",")]
    primes = [int(s) for s in args.primes.split(",")]
    rng = random.Random(args.seed)

    print(f"compiled extension available: {HAVE_COMPILED}")
    for p in primes:
        bench_polymul(p, sizes, args.repeats, rng)
    bench_nu(args.repeats)


if __name__ == "__main__":
    main()
