"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--size 400]

Both backends are imported directly, so one run times both.
"""
import argparse
import random
import timeit

from iwasawa import _pykernels

try:
    from iwasawa import _ckernels
except ImportError:
    _ckernels = None


def cases(n, m, rng):
    a = [rng.randrange(m) for _ in range(n)]
    b = [rng.randrange(m) for _ in range(n)]
    s = [0] + [rng.randrange(m) for _ in range(n - 1)]
    a0 = list(a)
    a0[0] = 1
    return {
        "mul_full": lambda k: k.mul_full(a, b, m),
        "mul_trunc": lambda k: k.mul_trunc(a, b, n, m),
        "taylor_shift": lambda k: k.taylor_shift(a, 3, m),
        "power_sums": lambda k: k.power_sums(a[:64], n, m),
        "compose_trunc": lambda k: k.compose_trunc(a[: n // 4], s, n // 4, m),
        "series_inverse": lambda k: k.series_inverse(a0, n, m, pow(a0[0], -1, m)),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--size", type=int, default=400)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--prime", type=int, default=5)
    ap.add_argument("--digits", type=int, default=24)
    args = ap.parse_args()
    m = args.prime ** args.digits
    rng = random.Random(0)
    table = cases(args.size, m, rng)
    print("%-16s %12s %12s %8s" % ("kernel", "python (s)", "cython (s)", "speedup"))
    for name, fn in table.items():
        tp = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=args.repeat))
        if _ckernels is None:
            print("%-16s %12.4f %12s %8s" % (name, tp, "n/a", "n/a"))
            continue
        assert fn(_pykernels) == fn(_ckernels), name
        tc = min(timeit.repeat(lambda: fn(_ckernels), number=1, repeat=args.repeat))
        print("%-16s %12.4f %12.4f %7.1fx" % (name, tp, tc, tp / tc))


if __name__ == "__main__":
    main()
