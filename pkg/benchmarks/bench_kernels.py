"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--scale 1.0] [--repeat 3]

Each kernel runs on identical inputs in both backends; results are checked
for equality before the timings are printed.
"""
import argparse
import random
import sys
import timeit

import numpy as np

from pclab.kernels import backends


def cases(scale):
    rng = random.Random(1)
    n_conv = int(1500 * scale)
    a = [rng.randrange(-10**20, 10**20) for _ in range(n_conv)]
    b = [rng.randrange(-10**20, 10**20) for _ in range(n_conv)]
    unit = [1] + [rng.randrange(-50, 50) for _ in range(n_conv - 1)]
    n_part = int(20000 * scale)
    mod = 7 ** 7
    p_mod = np.array(backends()["python"].partitions_mod(n_part, mod), dtype=np.int64)
    return [
        ("convolve", lambda k: k.convolve(a, b, n_conv)),
        ("convolve_mod 7^19", lambda k: k.convolve_mod(a, b, n_conv, 7 ** 19)),
        ("inverse", lambda k: k.inverse(unit, n_conv)),
        ("inverse_mod 7^19", lambda k: k.inverse_mod(unit, n_conv, 7 ** 19)),
        ("partitions exact", lambda k: k.partitions(n_part // 4)),
        ("partitions_mod 7^7", lambda k: k.partitions_mod(n_part, mod)),
        ("two_color_mod ell=7", lambda k: k.two_color_mod(p_mod, 7, n_part, mod)),
    ]


def same(x, y):
    return [int(v) for v in x] == [int(v) for v in y]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--scale", type=float, default=1.0, help="multiply problem sizes")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    found = backends()
    if "compiled" not in found:
        print("compiled extension not built; only the Python backend is available", file=sys.stderr)
        return 1
    py, cy = found["python"], found["compiled"]
    print(f"{'kernel':<22}{'python s':>12}{'compiled s':>12}{'speedup':>10}")
    for name, fn in cases(args.scale):
        if not same(fn(py), fn(cy)):
            print(f"{name}: backends disagree", file=sys.stderr)
            return 1
        tp = min(timeit.repeat(lambda: fn(py), number=1, repeat=args.repeat))
        tc = min(timeit.repeat(lambda: fn(cy), number=1, repeat=args.repeat))
        print(f"{name:<22}{tp:>12.4f}{tc:>12.4f}{tp / tc:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
